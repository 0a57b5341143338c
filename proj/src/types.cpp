/*
 * Copyright 2026 the ocnsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ocn/types.hpp"

namespace ocn {

const char* ch_name(Ch c) {
  switch (c) {
    case CH_AW: return "aw";
    case CH_W: return "w";
    case CH_B: return "b";
    case CH_AR: return "ar";
    case CH_R: return "r";
  }
  return "?";
}

const char* resp_name(Resp r) {
  switch (r) {
    case Resp::Okay: return "okay";
    case Resp::SlaveError: return "slverr";
    case Resp::DecodeError: return "decerr";
  }
  return "?";
}

static bool is_pow2(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

void check_command(const Command& cmd, uint32_t width_bytes) {
  if (!is_pow2(cmd.size)) throw ConfigError("command size must be a power of two");
  if (cmd.size > width_bytes) throw ConfigError("command size exceeds link data width");
  if (cmd.len >= kMaxBurstBeats) throw ConfigError("burst length cap is 256 beats");
  if (cmd.id.width > kMaxIdBits) throw ConfigError("id width above 32 bits");
  if (cmd.id.value & ~id_mask(cmd.id.width)) throw ConfigError("id value out of range for its width");
  uint64_t first = cmd.addr & ~uint64_t(cmd.size - 1);
  uint64_t last = first + uint64_t(cmd.beats()) * cmd.size - 1;
  if ((cmd.addr / kBurstBoundary) != (last / kBurstBoundary))
    throw ConfigError("burst crosses the 4096-byte boundary");
}

std::vector<BeatLanes> beats_of(const Command& cmd, uint32_t data_width_bytes) {
  if (cmd.size > data_width_bytes) throw ConfigError("beats_of: size exceeds data width");
  std::vector<BeatLanes> out;
  out.reserve(cmd.beats());
  uint64_t aligned = cmd.addr & ~uint64_t(cmd.size - 1);
  for (uint32_t k = 0; k < cmd.beats(); ++k) {
    BeatLanes b;
    b.addr = k == 0 ? cmd.addr : aligned + uint64_t(k) * cmd.size;
    b.lane_lo = uint32_t(b.addr % data_width_bytes);
    uint64_t slot = b.addr & ~uint64_t(cmd.size - 1);
    b.lane_hi = uint32_t(slot % data_width_bytes) + cmd.size;
    out.push_back(b);
  }
  return out;
}

}  // namespace ocn

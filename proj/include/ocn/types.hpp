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

#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocn {

// Link data widths are powers of two from 8 to 1024 bit.
constexpr uint32_t kMaxWidthBytes = 128;
constexpr uint32_t kMaxBurstBeats = 256;
constexpr uint64_t kBurstBoundary = 4096;  // no burst crosses this byte boundary
constexpr uint8_t kMaxIdBits = 32;

enum class Dir : uint8_t { Read = 0, Write = 1 };

enum class Resp : uint8_t { Okay = 0, SlaveError = 1, DecodeError = 2 };

// Five channels of a link. AW/W/B form the write direction, AR/R the read
// direction. AW, W, AR flow master->slave; B, R flow slave->master.
enum Ch : uint8_t { CH_AW = 0, CH_W = 1, CH_B = 2, CH_AR = 3, CH_R = 4 };
constexpr int kNumCh = 5;
const char* ch_name(Ch c);

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct TxnId {
  uint32_t value = 0;
  uint8_t width = 0;  // bits, 0..=32; value < 2^width

  friend bool operator==(const TxnId&, const TxnId&) = default;
};

inline uint32_t id_mask(uint8_t bits) {
  return bits >= 32 ? 0xffffffffu : ((1u << bits) - 1u);
}

// One beat on a read or write command channel. Direction is implied by the
// channel the command travels on. Only incrementing bursts exist.
struct Command {
  uint64_t addr = 0;
  TxnId id;
  uint16_t len = 0;       // beat count minus one, 0..=255
  uint16_t size = 1;      // bytes per beat, power of two, <= link width
  bool modifiable = true;
  uint8_t qos = 0;

  // Testbench metadata, carried end to end but never used for routing:
  // globally unique transaction serial assigned by the original initiator.
  uint64_t serial = 0;

  uint32_t beats() const { return uint32_t(len) + 1; }
  // Byte range covered by the burst: [addr, end_addr()).
  uint64_t end_addr() const { return (addr & ~uint64_t(size - 1)) + uint64_t(beats()) * size; }
  uint64_t bytes() const { return end_addr() - addr; }

  friend bool operator==(const Command&, const Command&) = default;
};

// One beat on the write data channel. Write data beats carry no ID.
struct DataBeat {
  std::array<uint8_t, kMaxWidthBytes> data{};
  std::bitset<kMaxWidthBytes> strb;
  bool last = false;

  // Testbench metadata: serial of the write command this beat belongs to.
  uint64_t burst_tag = 0;

  friend bool operator==(const DataBeat&, const DataBeat&) = default;
};

// One beat on a response channel. Write responses are single beats; read
// responses carry len+1 beats.
struct RespBeat {
  TxnId id;
  std::array<uint8_t, kMaxWidthBytes> data{};
  Resp resp = Resp::Okay;
  bool last = true;

  uint64_t serial = 0;  // testbench metadata, mirrors Command::serial

  friend bool operator==(const RespBeat&, const RespBeat&) = default;
};

const char* resp_name(Resp r);

// Validates the Command invariants against a link width. Throws ConfigError
// on violation; used by generators and the topology loader, not on the hot
// path.
void check_command(const Command& cmd, uint32_t width_bytes);

struct BeatLanes {
  uint64_t addr = 0;   // byte address of this beat
  uint32_t lane_lo = 0;  // first active byte lane on the link
  uint32_t lane_hi = 0;  // one past the last active byte lane
};

// Address/lane walk of an incrementing burst. Entry k covers
// [lane_lo, lane_hi) on the data bus; the first beat may be unaligned.
std::vector<BeatLanes> beats_of(const Command& cmd, uint32_t data_width_bytes);

// Merges two response codes; the more severe one wins.
inline Resp worst_resp(Resp a, Resp b) {
  return static_cast<uint8_t>(a) >= static_cast<uint8_t>(b) ? a : b;
}

}  // namespace ocn

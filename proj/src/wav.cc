// src/wav.cc

// Copyright 2026  RemixKit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "remixkit/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "remixkit/error.h"

namespace remixkit {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

void put_u32(std::vector<char>& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::vector<char>& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_tag(std::vector<char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

std::int16_t to_pcm16(double x) {
  const double scaled = std::nearbyint(x * 32767.0);
  return static_cast<std::int16_t>(
      std::clamp(scaled, -32768.0, 32767.0));
}

struct Cursor {
  const char* data;
  std::size_t size;
  std::size_t pos = 0;
  const std::filesystem::path& path;

  void need(std::size_t n) const {
    if (pos + n > size) {
      throw IoError("truncated WAV file: " + path.string());
    }
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    std::memcpy(&v, data + pos, 4);
    pos += 4;
    return v;
  }
  std::uint16_t u16() {
    need(2);
    std::uint16_t v = 0;
    std::memcpy(&v, data + pos, 2);
    pos += 2;
    return v;
  }
  bool tag(const char* t) {
    need(4);
    const bool ok = std::memcmp(data + pos, t, 4) == 0;
    pos += 4;
    return ok;
  }
};

}  // namespace

void write_wav(const std::filesystem::path& path, const AudioBuffer& buf,
               WavFormat format) {
  if (buf.empty()) throw Error("write_wav: empty buffer");
  const std::uint16_t bytes_per_sample =
      format == WavFormat::kFloat32 ? 4 : 2;
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(buf.size()) * bytes_per_sample;
  const std::uint32_t rate = static_cast<std::uint32_t>(buf.sample_rate);

  std::vector<char> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, format == WavFormat::kFloat32 ? kFormatIeeeFloat : kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, rate);
  put_u32(out, rate * bytes_per_sample);
  put_u16(out, bytes_per_sample);
  put_u16(out, static_cast<std::uint16_t>(bytes_per_sample * 8));
  put_tag(out, "data");
  put_u32(out, data_bytes);

  if (format == WavFormat::kFloat32) {
    for (double s : buf.samples) {
      const float f = static_cast<float>(s);
      char raw[4];
      std::memcpy(raw, &f, 4);
      out.insert(out.end(), raw, raw + 4);
    }
  } else {
    for (double s : buf.samples) {
      const std::int16_t v = to_pcm16(s);
      out.push_back(static_cast<char>(v & 0xff));
      out.push_back(static_cast<char>((v >> 8) & 0xff));
    }
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failed: " + path.string());
}

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path.string());
  std::vector<char> raw((std::istreambuf_iterator<char>(f)),
                        std::istreambuf_iterator<char>());
  Cursor c{raw.data(), raw.size(), 0, path};

  if (!c.tag("RIFF")) throw IoError("not a RIFF file: " + path.string());
  c.u32();  // riff size; trust chunk sizes instead
  if (!c.tag("WAVE")) throw IoError("not a WAVE file: " + path.string());

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  AudioBuffer buf;

  while (c.pos + 8 <= c.size) {
    c.need(8);
    char tag[4];
    std::memcpy(tag, c.data + c.pos, 4);
    c.pos += 4;
    const std::uint32_t chunk_size = c.u32();
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw IoError("bad fmt chunk: " + path.string());
      format = c.u16();
      channels = c.u16();
      rate = c.u32();
      c.u32();  // byte rate
      c.u16();  // block align
      bits = c.u16();
      c.need(chunk_size - 16);
      c.pos += chunk_size - 16;
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw IoError("data before fmt: " + path.string());
      if (channels != 1) {
        throw IoError("only mono WAV supported: " + path.string());
      }
      c.need(chunk_size);
      const char* p = c.data + c.pos;
      if (format == kFormatIeeeFloat && bits == 32) {
        const std::size_t n = chunk_size / 4;
        buf.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          float v = 0;
          std::memcpy(&v, p + 4 * i, 4);
          buf.samples[i] = static_cast<double>(v);
        }
      } else if (format == kFormatPcm && bits == 16) {
        const std::size_t n = chunk_size / 2;
        buf.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          std::int16_t v = 0;
          std::memcpy(&v, p + 2 * i, 2);
          buf.samples[i] = static_cast<double>(v) / 32767.0;
        }
      } else {
        throw IoError("unsupported WAV encoding in " + path.string());
      }
      buf.sample_rate = static_cast<int>(rate);
      return buf;
    } else {
      c.need(chunk_size);
      c.pos += chunk_size;
    }
    if (chunk_size % 2 == 1 && c.pos < c.size) ++c.pos;  // chunk padding
  }
  throw IoError("no data chunk: " + path.string());
}

void quantize_to_format(AudioBuffer& buf, WavFormat format) {
  if (format == WavFormat::kFloat32) {
    for (double& s : buf.samples) {
      s = static_cast<double>(static_cast<float>(s));
    }
  } else {
    for (double& s : buf.samples) {
      s = static_cast<double>(to_pcm16(s)) / 32767.0;
    }
  }
}

}  // namespace remixkit

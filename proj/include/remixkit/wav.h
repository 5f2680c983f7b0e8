// include/remixkit/wav.h

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

#ifndef REMIXKIT_WAV_H_
#define REMIXKIT_WAV_H_

#include <filesystem>

#include "remixkit/signal.h"

namespace remixkit {

// Mono RIFF/WAVE, little-endian. Float32 is the default storage format so
// that SNR scaling above unit amplitude never clips.
enum class WavFormat { kFloat32, kPcm16 };

void write_wav(const std::filesystem::path& path, const AudioBuffer& buf,
               WavFormat format = WavFormat::kFloat32);

// Reads a mono 16-bit PCM or 32-bit float WAV. Anything else is an IoError.
AudioBuffer read_wav(const std::filesystem::path& path);

// Snaps every sample to the value it will have after a write/read round trip
// in the given format. Generators call this before deriving quantities that
// must survive storage exactly.
void quantize_to_format(AudioBuffer& buf, WavFormat format);

}  // namespace remixkit

#endif  // REMIXKIT_WAV_H_

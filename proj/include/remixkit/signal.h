// include/remixkit/signal.h

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

#ifndef REMIXKIT_SIGNAL_H_
#define REMIXKIT_SIGNAL_H_

#include <cstddef>
#include <vector>

namespace remixkit {

// Mono signal. Samples are dimensionless amplitudes; all arithmetic on them
// is carried out in double precision.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 16000;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

// A signal-to-noise ratio in decibels.
struct SnrDb {
  double db = 0.0;
};

inline constexpr double kDefaultSiSdrCeilingDb = 60.0;

// Mean-square amplitude: (1/T) * sum(x^2). Throws on an empty or non-finite
// buffer.
double power(const AudioBuffer& buf);

// 10*log10(power(speech)/power(noise)). Both buffers must have equal length.
// Zero-power noise raises DivergentSnr; zero-power speech raises Error.
SnrDb measure_snr(const AudioBuffer& speech, const AudioBuffer& noise);

// Amplitude gain g such that measure_snr(speech, g*noise) equals target:
// g = sqrt(power(speech) / (power(noise) * 10^(target/10))).
double gain_for_target_snr(const AudioBuffer& speech, const AudioBuffer& noise,
                           SnrDb target);

// Element-wise speech + gain*noise. Lengths and sample rates must match.
AudioBuffer mix(const AudioBuffer& speech, const AudioBuffer& noise,
                double gain);

// Scale-invariant signal-to-distortion ratio. The estimate is projected onto
// the reference (alpha = <est,ref>/||ref||^2) and the value is
// 10*log10(||alpha*ref||^2 / ||alpha*ref - est||^2), clamped to
// [-ceiling, +ceiling] so that exact reconstructions stay finite.
SnrDb si_sdr(const AudioBuffer& estimate, const AudioBuffer& reference,
             double ceiling_db = kDefaultSiSdrCeilingDb);

// si_sdr(estimate, reference) - si_sdr(mixture, reference), in dB.
double si_sdr_improvement(const AudioBuffer& estimate,
                          const AudioBuffer& reference,
                          const AudioBuffer& mixture,
                          double ceiling_db = kDefaultSiSdrCeilingDb);

// (1/T) * sum((a - b)^2).
double mse(const AudioBuffer& a, const AudioBuffer& b);

}  // namespace remixkit

#endif  // REMIXKIT_SIGNAL_H_

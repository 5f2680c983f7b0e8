// src/signal.cc

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

#include "remixkit/signal.h"

#include <cmath>

#include "remixkit/error.h"

namespace remixkit {

namespace {

void require_same_length(const AudioBuffer& a, const AudioBuffer& b,
                         const char* what) {
  if (a.size() != b.size()) {
    throw Error(std::string(what) + ": length mismatch (" +
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                ")");
  }
}

double sum_squares(const AudioBuffer& buf, const char* what) {
  if (buf.empty()) throw Error(std::string(what) + ": empty buffer");
  double acc = 0.0;
  for (double s : buf.samples) acc += s * s;
  if (!std::isfinite(acc)) {
    throw Error(std::string(what) + ": non-finite samples");
  }
  return acc;
}

}  // namespace

double power(const AudioBuffer& buf) {
  return sum_squares(buf, "power") / static_cast<double>(buf.size());
}

SnrDb measure_snr(const AudioBuffer& speech, const AudioBuffer& noise) {
  require_same_length(speech, noise, "measure_snr");
  const double ps = power(speech);
  const double pn = power(noise);
  if (pn <= 0.0) throw DivergentSnr("measure_snr: zero-power noise");
  if (ps <= 0.0) throw Error("measure_snr: zero-power speech");
  return SnrDb{10.0 * std::log10(ps / pn)};
}

double gain_for_target_snr(const AudioBuffer& speech, const AudioBuffer& noise,
                           SnrDb target) {
  const double ps = power(speech);
  const double pn = power(noise);
  if (ps <= 0.0 || pn <= 0.0) {
    throw Error("gain_for_target_snr: zero-power input");
  }
  return std::sqrt(ps / (pn * std::pow(10.0, target.db / 10.0)));
}

AudioBuffer mix(const AudioBuffer& speech, const AudioBuffer& noise,
                double gain) {
  require_same_length(speech, noise, "mix");
  if (speech.sample_rate != noise.sample_rate) {
    throw Error("mix: sample-rate mismatch");
  }
  AudioBuffer out;
  out.sample_rate = speech.sample_rate;
  out.samples.resize(speech.size());
  for (std::size_t i = 0; i < speech.size(); ++i) {
    out.samples[i] = speech.samples[i] + gain * noise.samples[i];
  }
  return out;
}

SnrDb si_sdr(const AudioBuffer& estimate, const AudioBuffer& reference,
             double ceiling_db) {
  require_same_length(estimate, reference, "si_sdr");
  const double ref_energy = sum_squares(reference, "si_sdr");
  if (ref_energy <= 0.0) throw Error("si_sdr: zero-power reference");

  double dot = 0.0;
  for (std::size_t i = 0; i < estimate.size(); ++i) {
    dot += estimate.samples[i] * reference.samples[i];
  }
  if (!std::isfinite(dot)) throw Error("si_sdr: non-finite estimate");

  const double alpha = dot / ref_energy;
  const double target_energy = alpha * alpha * ref_energy;
  double resid_energy = 0.0;
  for (std::size_t i = 0; i < estimate.size(); ++i) {
    const double r = alpha * reference.samples[i] - estimate.samples[i];
    resid_energy += r * r;
  }

  // Numerically perfect reconstruction: clamp instead of diverging.
  if (resid_energy < 1e-12 * target_energy) return SnrDb{ceiling_db};
  if (target_energy < 1e-12 * resid_energy) return SnrDb{-ceiling_db};

  const double value = 10.0 * std::log10(target_energy / resid_energy);
  if (value > ceiling_db) return SnrDb{ceiling_db};
  if (value < -ceiling_db) return SnrDb{-ceiling_db};
  return SnrDb{value};
}

double si_sdr_improvement(const AudioBuffer& estimate,
                          const AudioBuffer& reference,
                          const AudioBuffer& mixture, double ceiling_db) {
  return si_sdr(estimate, reference, ceiling_db).db -
         si_sdr(mixture, reference, ceiling_db).db;
}

double mse(const AudioBuffer& a, const AudioBuffer& b) {
  require_same_length(a, b, "mse");
  if (a.empty()) throw Error("mse: empty buffer");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.samples[i] - b.samples[i];
    acc += d * d;
  }
  if (!std::isfinite(acc)) throw Error("mse: non-finite samples");
  return acc / static_cast<double>(a.size());
}

}  // namespace remixkit

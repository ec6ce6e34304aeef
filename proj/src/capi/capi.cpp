#include "pointmass.h"

#include <complex>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "../core/errors.hpp"
#include "../core/point_mass.hpp"
#include "../core/runner.hpp"
#include "../core/szego_map.hpp"
#include "../core/verblunsky.hpp"

namespace {

thread_local std::string g_last_error;

pm_status status_of(pointmass::ErrorCode code) {
  using pointmass::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return PM_ERR_INVALID_ARGUMENT;
    case ErrorCode::invalid_coefficient: return PM_ERR_INVALID_COEFFICIENT;
    case ErrorCode::not_in_class: return PM_ERR_NOT_IN_CLASS;
    case ErrorCode::conditioning: return PM_ERR_CONDITIONING;
    case ErrorCode::overflow: return PM_ERR_OVERFLOW;
    case ErrorCode::numeric: return PM_ERR_NUMERIC;
    case ErrorCode::io: return PM_ERR_IO;
  }
  return PM_ERR_NUMERIC;
}

template <typename F>
pm_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const pointmass::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PM_ERR_NUMERIC;
  }
}

pm_status invalid(const char* msg) {
  g_last_error = msg;
  return PM_ERR_INVALID_ARGUMENT;
}

}  // namespace

struct pm_sequence {
  pointmass::VerblunskySequence seq;
};

struct pm_jacobi {
  pointmass::JacobiCoefficients jc;
};

struct pm_config {
  std::vector<std::pair<std::string, std::string>> kv;
};

extern "C" {

const char* pm_last_error(void) { return g_last_error.c_str(); }

pm_status pm_sequence_interleaved(double tau_inf, pm_sequence** out) {
  if (!out) return invalid("null output pointer");
  return guarded([&] {
    *out = new pm_sequence{pointmass::VerblunskySequence::interleaved(tau_inf)};
    return PM_OK;
  });
}

pm_status pm_sequence_interleaved_constant(double tau, pm_sequence** out) {
  if (!out) return invalid("null output pointer");
  return guarded([&] {
    *out = new pm_sequence{pointmass::VerblunskySequence::interleaved_constant(tau)};
    return PM_OK;
  });
}

pm_status pm_sequence_from_list(const double* alpha, size_t count, pm_sequence** out) {
  if (!out || (count && !alpha)) return invalid("null pointer argument");
  return guarded([&] {
    std::vector<std::complex<double>> list(alpha, alpha + count);
    *out = new pm_sequence{pointmass::VerblunskySequence::explicit_list(std::move(list))};
    return PM_OK;
  });
}

void pm_sequence_free(pm_sequence* seq) { delete seq; }

pm_status pm_sequence_alpha(const pm_sequence* seq, size_t n, double* re, double* im) {
  if (!seq) return invalid("null sequence");
  return guarded([&] {
    auto a = seq->seq.alpha(n);
    if (re) *re = a.real();
    if (im) *im = a.imag();
    return PM_OK;
  });
}

pm_status pm_delta_at_one(const pm_sequence* seq, double beta, size_t m,
                          double* delta_even, double* delta_odd) {
  if (!seq) return invalid("null sequence");
  return guarded([&] {
    pointmass::PointMassSpec spec(0.0, beta);
    pointmass::FastDeltaScan scan(seq->seq, spec);
    while (scan.m() < m) scan.advance();
    if (delta_even) *delta_even = scan.even();
    if (delta_odd) *delta_odd = scan.odd();
    return PM_OK;
  });
}

pm_status pm_perturb(const pm_sequence* seq, double omega, double beta, size_t count,
                     double* alpha_re, double* alpha_im) {
  if (!seq) return invalid("null sequence");
  return guarded([&] {
    pointmass::PointMassSpec spec(omega, beta);
    auto records = pointmass::perturb_sequence(seq->seq, spec, count);
    for (size_t n = 0; n < records.size(); ++n) {
      if (alpha_re) alpha_re[n] = records[n].alpha_perturbed.real();
      if (alpha_im) alpha_im[n] = records[n].alpha_perturbed.imag();
    }
    return PM_OK;
  });
}

pm_status pm_jacobi_from_sequence(const pm_sequence* seq, size_t count,
                                  pm_jacobi** out) {
  if (!seq || !out) return invalid("null pointer argument");
  return guarded([&] {
    *out = new pm_jacobi{pointmass::direct_geronimus(seq->seq, count)};
    return PM_OK;
  });
}

void pm_jacobi_free(pm_jacobi* jc) { delete jc; }

size_t pm_jacobi_size(const pm_jacobi* jc) { return jc ? jc->jc.size() : 0; }

pm_status pm_jacobi_get(const pm_jacobi* jc, size_t n, double* a, double* b) {
  if (!jc) return invalid("null handle");
  if (n < 1 || n > jc->jc.size()) return invalid("jacobi index out of range");
  if (a) *a = jc->jc.a[n - 1];
  if (b) *b = jc->jc.b[n - 1];
  g_last_error.clear();
  return PM_OK;
}

pm_status pm_config_create(pm_config** out) {
  if (!out) return invalid("null output pointer");
  *out = new pm_config{};
  g_last_error.clear();
  return PM_OK;
}

void pm_config_free(pm_config* config) { delete config; }

pm_status pm_config_set(pm_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return invalid("null pointer argument");
  config->kv.emplace_back(key, value);
  g_last_error.clear();
  return PM_OK;
}

pm_status pm_config_load(pm_config* config, const char* path) {
  if (!config || !path) return invalid("null pointer argument");
  return guarded([&] {
    std::ifstream f(path);
    pointmass::require(static_cast<bool>(f), pointmass::ErrorCode::io,
                       std::string("cannot read config file ") + path);
    std::string line;
    while (std::getline(f, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      auto eq = line.find('=');
      pointmass::require(eq != std::string::npos && eq > 0,
                         pointmass::ErrorCode::invalid_argument,
                         "config line is not key=value: " + line);
      auto key_end = line.find_last_not_of(" \t", eq - 1);
      auto val_begin = line.find_first_not_of(" \t", eq + 1);
      pointmass::require(key_end != std::string::npos,
                         pointmass::ErrorCode::invalid_argument,
                         "config line is not key=value: " + line);
      config->kv.emplace_back(
          line.substr(0, key_end + 1),
          val_begin == std::string::npos ? "" : line.substr(val_begin));
    }
    return PM_OK;
  });
}

pm_status pm_run(const pm_config* config) {
  if (!config) return invalid("null config");
  return guarded([&] {
    auto rc = pointmass::RunConfig::from_pairs(config->kv);
    return pointmass::run(rc) ? PM_OK : PM_ERR_VERIFICATION;
  });
}

}  // extern "C"

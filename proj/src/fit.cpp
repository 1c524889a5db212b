// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/fit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace surfstate::fit {

namespace {

double level_energy(int n, double e0, double delta) {
  const double s = n - delta;
  return -e0 / (s * s);
}

// dE/d e0 and dE/d delta of one entry
void jacobian_row(const LevelEntry& entry, double e0, double delta,
                  double& d_e0, double& d_delta) {
  const double s = entry.n - delta;
  d_e0 = -1.0 / (s * s);
  d_delta = -2.0 * e0 / (s * s * s);
  if (entry.kind == EntryKind::transition_from_ground) {
    const double s1 = 1.0 - delta;
    d_e0 += 1.0 / (s1 * s1);
    d_delta += 2.0 * e0 / (s1 * s1 * s1);
  }
}

struct Objective {
  double value = 0.0;        // sum w r^2
  double g0 = 0.0, g1 = 0.0; // gradient (up to a factor 2)
  double a00 = 0.0, a01 = 0.0, a11 = 0.0;  // J^T W J
};

Objective evaluate(const LevelDataset& data, double e0, double delta,
                   bool with_derivatives) {
  Objective obj{};
  for (const LevelEntry& entry : data.entries) {
    const double r = model_value_ghz(entry, e0, delta) - entry.value_ghz;
    obj.value += entry.weight * r * r;
    if (!with_derivatives) continue;
    double j0, j1;
    jacobian_row(entry, e0, delta, j0, j1);
    obj.g0 += entry.weight * j0 * r;
    obj.g1 += entry.weight * j1 * r;
    obj.a00 += entry.weight * j0 * j0;
    obj.a01 += entry.weight * j0 * j1;
    obj.a11 += entry.weight * j1 * j1;
  }
  return obj;
}

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
  throw ConfigError("dataset parse error at line " + std::to_string(line) +
                    ", column " + std::to_string(column) + ": " + what);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

double model_value_ghz(const LevelEntry& entry, double e0_ghz, double delta) {
  const double e_n = level_energy(entry.n, e0_ghz, delta);
  if (entry.kind == EntryKind::level_energy) return e_n;
  return e_n - level_energy(1, e0_ghz, delta);
}

void LevelDataset::validate() const {
  if (entries.size() < 3)
    throw ConfigError("dataset needs at least 3 entries to fit 2 parameters");
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const LevelEntry& e = entries[i];
    if (e.n < 1)
      throw ConfigError("dataset entry " + std::to_string(i + 1) +
                        ": n must be >= 1");
    if (!(e.weight > 0.0))
      throw ConfigError("dataset entry " + std::to_string(i + 1) +
                        ": weight must be positive");
    if (!seen.insert({static_cast<int>(e.kind), e.n}).second)
      throw ConfigError("dataset entry " + std::to_string(i + 1) +
                        ": duplicate n = " + std::to_string(e.n) +
                        " for this kind");
  }
}

LevelDataset parse_dataset_csv(std::istream& in) {
  LevelDataset data{};
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) parse_fail(1, 1, "empty input");
  ++line_no;
  {
    std::vector<std::string> h = split_csv_line(line);
    for (auto& f : h) f = trimmed(f);
    const bool three = h.size() == 3 && h[0] == "n" && h[1] == "value_ghz" &&
                       h[2] == "kind";
    const bool four = h.size() == 4 && h[0] == "n" && h[1] == "value_ghz" &&
                      h[2] == "kind" && h[3] == "weight";
    if (!three && !four)
      parse_fail(1, 1, "header must be 'n,value_ghz,kind[,weight]'");
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 3 && f.size() != 4)
      parse_fail(line_no, 1, "expected 3 or 4 fields, got " +
                                 std::to_string(f.size()));
    LevelEntry e{};
    try {
      std::size_t pos = 0;
      e.n = std::stoi(trimmed(f[0]), &pos);
      if (pos != trimmed(f[0]).size()) throw std::invalid_argument("n");
    } catch (const std::exception&) {
      parse_fail(line_no, 1, "bad integer n: '" + f[0] + "'");
    }
    try {
      std::size_t pos = 0;
      e.value_ghz = std::stod(trimmed(f[1]), &pos);
      if (pos != trimmed(f[1]).size()) throw std::invalid_argument("v");
    } catch (const std::exception&) {
      parse_fail(line_no, 2, "bad value_ghz: '" + f[1] + "'");
    }
    const std::string kind = trimmed(f[2]);
    if (kind == "level_energy")
      e.kind = EntryKind::level_energy;
    else if (kind == "transition_from_ground")
      e.kind = EntryKind::transition_from_ground;
    else
      parse_fail(line_no, 3, "kind must be 'level_energy' or "
                             "'transition_from_ground', got '" + kind + "'");
    e.weight = 1.0;
    if (f.size() == 4) {
      try {
        std::size_t pos = 0;
        e.weight = std::stod(trimmed(f[3]), &pos);
        if (pos != trimmed(f[3]).size()) throw std::invalid_argument("w");
      } catch (const std::exception&) {
        parse_fail(line_no, 4, "bad weight: '" + f[3] + "'");
      }
    }
    data.entries.push_back(e);
  }
  data.validate();
  return data;
}

LevelDataset load_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open dataset file: " + path);
  return parse_dataset_csv(in);
}

FitResult fit_levels(const LevelDataset& data,
                     std::optional<std::pair<double, double>> init) {
  data.validate();

  double e0, delta;
  if (init) {
    e0 = init->first;
    delta = init->second;
  } else {
    // most strongly bound entry pins the scale
    const LevelEntry* best = &data.entries.front();
    for (const LevelEntry& e : data.entries)
      if (std::abs(e.value_ghz) > std::abs(best->value_ghz)) best = &e;
    delta = 0.02;
    e0 = std::abs(best->value_ghz) * (best->n - 0.5) * (best->n - 0.5);
  }
  if (!(delta > 0.0) || !(delta < 1.0) || !(e0 > 0.0))
    throw DomainError("fit init requires e0 > 0 and delta in (0,1)");

  constexpr int kMaxIter = 200;
  constexpr double kGradTol = 1e-10;
  double mu = 0.0;  // set after the first objective evaluation
  Objective cur = evaluate(data, e0, delta, true);
  int iter = 0;
  for (; iter < kMaxIter; ++iter) {
    const double scale0 = std::max(std::abs(e0), 1.0);
    const double scale1 = 1.0;
    const double gnorm = std::max(std::abs(cur.g0) * scale0,
                                  std::abs(cur.g1) * scale1);
    if (gnorm <= kGradTol * std::max(cur.value, 1.0)) break;

    if (mu == 0.0) mu = 1e-6 * std::max(cur.a00, cur.a11);

    bool accepted = false;
    for (int attempt = 0; attempt < 60 && !accepted; ++attempt) {
      const double a00 = cur.a00 + mu * std::max(cur.a00, 1e-300);
      const double a11 = cur.a11 + mu * std::max(cur.a11, 1e-300);
      const double det = a00 * a11 - cur.a01 * cur.a01;
      if (det <= 0.0) {
        mu *= 4.0;
        continue;
      }
      double step0 = -(a11 * cur.g0 - cur.a01 * cur.g1) / det;
      double step1 = -(a00 * cur.g1 - cur.a01 * cur.g0) / det;

      // backtrack into the admissible box for delta and positive e0
      double t = 1.0;
      for (int back = 0; back < 60; ++back) {
        const double nd = delta + t * step1;
        const double ne = e0 + t * step0;
        if (nd > 0.0 && nd < 1.0 && ne > 0.0) break;
        t *= 0.5;
        if (back == 59)
          throw DomainError("fit step cannot keep delta inside (0,1)");
      }
      const double ne0 = e0 + t * step0;
      const double ndelta = delta + t * step1;
      const Objective trial = evaluate(data, ne0, ndelta, true);
      if (trial.value <= cur.value) {
        e0 = ne0;
        delta = ndelta;
        cur = trial;
        mu = std::max(mu / 3.0, 1e-14 * std::max(cur.a00, cur.a11));
        accepted = true;
      } else {
        mu *= 4.0;
      }
    }
    if (!accepted) break;  // damping saturated; gradient check decides below
  }
  if (iter == kMaxIter)
    throw ConvergenceError("fit did not converge in 200 iterations");

  FitResult out{};
  out.e0_ghz = e0;
  out.delta = delta;
  out.iterations = iter;
  double wsum = 0.0;
  for (const LevelEntry& e : data.entries) wsum += e.weight;
  out.rms_residual_ghz = std::sqrt(cur.value / wsum);

  // covariance proxy: sigma^2 (J^T W J)^{-1} with sigma^2 from the residual
  const double dof = std::max<double>(data.entries.size() - 2, 1);
  const double sigma2 = cur.value / dof;
  const double det = cur.a00 * cur.a11 - cur.a01 * cur.a01;
  if (det > 0.0) {
    out.covariance_proxy = {sigma2 * cur.a11 / det, -sigma2 * cur.a01 / det,
                            -sigma2 * cur.a01 / det, sigma2 * cur.a00 / det};
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.covariance_proxy = {nan, nan, nan, nan};
  }
  return out;
}

double jacobian_check(const LevelDataset& data, double e0_ghz, double delta) {
  double worst = 0.0;
  const double he = 1e-6 * std::max(std::abs(e0_ghz), 1.0);
  const double hd = 1e-6;
  for (const LevelEntry& e : data.entries) {
    double j0, j1;
    jacobian_row(e, e0_ghz, delta, j0, j1);
    const double fd0 = (model_value_ghz(e, e0_ghz + he, delta) -
                        model_value_ghz(e, e0_ghz - he, delta)) /
                       (2.0 * he);
    const double fd1 = (model_value_ghz(e, e0_ghz, delta + hd) -
                        model_value_ghz(e, e0_ghz, delta - hd)) /
                       (2.0 * hd);
    const double r0 = std::abs(fd0 - j0) / std::max(std::abs(j0), 1e-30);
    const double r1 = std::abs(fd1 - j1) / std::max(std::abs(j1), 1e-30);
    worst = std::max({worst, r0, r1});
  }
  return worst;
}

}  // namespace surfstate::fit

#pragma once

// End-to-end pipeline: frame selector -> frame -> lattice -> geometry, plus
// the summary table and search reports, rendered as JSON, CSV or text.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "etflat/cache.hpp"
#include "etflat/circulant.hpp"
#include "etflat/error.hpp"
#include "etflat/frames.hpp"
#include "etflat/geometry.hpp"
#include "etflat/lattice.hpp"

namespace etflat {

using ojson = nlohmann::ordered_json;

inline ojson surd_json(const SurdValue& s) { return {{"coeff", s.coeff().get_str()}, {"radicand", s.radicand().get_str()}}; }

// ---------------------------------------------------------------------------
// Selectors
// ---------------------------------------------------------------------------

/// simplex:K | conference:K[:I[:plus|minus|ab]] | explicit:6x16 | explicit:7x28.
/// A conference selector without a variant picks plus when N is integral and
/// minus otherwise.
struct FrameSelector {
  FrameKind kind = FrameKind::Custom;
  std::size_t k = 0;
  std::size_t pair_index = 1;
  std::optional<Variant> variant;
  bool two_parameter = false;
  std::string text;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::size_t parse_count(const std::string& s, const std::string& selector) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
    throw Error(ErrorCode::UnknownSelector, "bad number in selector '" + selector + "'");
  return std::stoul(s);
}

}  // namespace detail

inline FrameSelector parse_selector(const std::string& text) {
  const auto parts = detail::split(text, ':');
  FrameSelector sel;
  sel.text = text;
  if (parts.size() == 2 && parts[0] == "simplex") {
    sel.kind = FrameKind::Simplex;
    sel.k = detail::parse_count(parts[1], text);
    if (sel.k < 2) throw Error(ErrorCode::UnknownSelector, "simplex needs k >= 2");
    return sel;
  }
  if (parts.size() == 2 && parts[0] == "explicit") {
    if (parts[1] == "6x16") sel.kind = FrameKind::Explicit6x16, sel.k = 6;
    else if (parts[1] == "7x28") sel.kind = FrameKind::Explicit7x28, sel.k = 7;
    else throw Error(ErrorCode::UnknownSelector, "unknown explicit frame '" + text + "'");
    return sel;
  }
  if (parts.size() >= 2 && parts.size() <= 4 && parts[0] == "conference") {
    sel.kind = FrameKind::Conference;
    sel.k = detail::parse_count(parts[1], text);
    if (sel.k < 3 || sel.k % 2 == 0) throw Error(ErrorCode::UnknownSelector, "conference needs odd k >= 3");
    if (parts.size() >= 3) sel.pair_index = detail::parse_count(parts[2], text);
    if (sel.pair_index == 0) throw Error(ErrorCode::UnknownSelector, "pair index is 1-based");
    if (parts.size() == 4) {
      if (parts[3] == "plus") sel.variant = Variant::Plus;
      else if (parts[3] == "minus") sel.variant = Variant::Minus;
      else if (parts[3] == "ab") sel.two_parameter = true;
      else throw Error(ErrorCode::UnknownSelector, "variant must be plus, minus or ab");
    }
    return sel;
  }
  throw Error(ErrorCode::UnknownSelector, "unknown selector '" + text + "'");
}

inline bool n_is_integral(const ConferencePair& p) {
  const BigRational alpha(conference_alpha(p));
  return compute_N(p, alpha, 0, alpha).all_integer();
}

/// Plus when N is integral, otherwise minus.
inline Variant preferred_variant(const ConferencePair& p) {
  return n_is_integral(p) ? Variant::Plus : Variant::Minus;
}

/// The coordinate frame a selector names. Requires rational alpha.
inline CoordinateFrame resolve_frame(const FrameSelector& sel, PairProvider& provider) {
  switch (sel.kind) {
    case FrameKind::Simplex: return simplex_frame(sel.k).second;
    case FrameKind::Explicit6x16: return frame_6_16().second;
    case FrameKind::Explicit7x28: return frame_7_28().second;
    case FrameKind::Conference: {
      const auto& pairs = provider.pairs(sel.k);
      if (sel.pair_index > pairs.size())
        throw Error(ErrorCode::UnknownSelector, "only " + std::to_string(pairs.size()) + " pairs for k = " +
                                                     std::to_string(sel.k));
      const auto& p = pairs[sel.pair_index - 1];
      if (sel.two_parameter) {
        const BigRational alpha(conference_alpha(p));
        return goethals_seidel_coordinates(p, 0, alpha, sel.pair_index);
      }
      return conference_frame(p, sel.variant.value_or(preferred_variant(p)), sel.pair_index).second;
    }
    default: break;
  }
  throw Error(ErrorCode::UnknownSelector, "unsupported selector '" + sel.text + "'");
}

inline std::size_t selector_n(const FrameSelector& sel) {
  switch (sel.kind) {
    case FrameKind::Simplex: return sel.k + 1;
    case FrameKind::Explicit6x16: return 16;
    case FrameKind::Explicit7x28: return 28;
    default: return 2 * sel.k;
  }
}

// ---------------------------------------------------------------------------
// Lattice analysis
// ---------------------------------------------------------------------------

struct AnalysisOptions {
  std::uint64_t basis_search_cap = kDefaultBasisSearchCap;
  EnumerationOptions enumeration;
};

struct AnalysisReport {
  std::size_t k = 0, n = 0;
  std::string label;
  LatticeVerdict verdict;
  // Only set for lattices.
  std::vector<std::size_t> basis;  // 0-based
  BigInt beta = 1;
  SurdValue det;
  BigRational min_norm_sq;
  std::size_t min_vec_count_with_signs = 0;
  bool frames_are_minimal = false;
  BasisStatus basis_of_minimal_vectors = BasisStatus::Indeterminate;
  double density = 0;
  EutaxyReport eutaxy;
  PerfectionReport perfection;
  RationalMatrix gram;
};

inline AnalysisReport analyze_frame(const CoordinateFrame& cf, AnalysisOptions opts = {}) {
  AnalysisReport r;
  r.k = cf.frame.k;
  r.n = cf.frame.n;
  r.label = cf.frame.label.str();
  r.verdict = alpha_gate(r.k, r.n);
  r.basis = cf.basis;
  r.beta = cf.beta;
  const auto model = LatticeModel::from_coordinate_frame(cf);
  r.gram = model.gram;
  r.det = lattice_determinant(model);
  const auto mv = minimal_vectors(model, opts.enumeration);
  r.min_norm_sq = mv.min_norm_sq;
  r.min_vec_count_with_signs = mv.count_with_signs();
  r.frames_are_minimal = frame_vectors_are_minimal(model, mv);
  r.basis_of_minimal_vectors = has_basis_of_minimal_vectors(model, mv, opts.basis_search_cap);
  r.density = packing_density(model, mv);
  r.eutaxy = strong_eutaxy_check(model, mv);
  r.perfection = perfection_rank(model, mv);
  if (cf.frame.label.kind == FrameKind::Explicit7x28) r.perfection.det_d = bacher_det_728();
  return r;
}

/// Irrational alpha is reported as a structured non-lattice result.
inline AnalysisReport analyze_selector(const std::string& text, PairProvider& provider, AnalysisOptions opts = {}) {
  const auto sel = parse_selector(text);
  const std::size_t n = selector_n(sel);
  const auto verdict = alpha_gate(sel.k, n);
  if (!verdict.is_lattice) {
    AnalysisReport r;
    r.k = sel.k;
    r.n = n;
    r.label = sel.text;
    r.verdict = verdict;
    return r;
  }
  return analyze_frame(resolve_frame(sel, provider), opts);
}

inline ojson to_json(const AnalysisReport& r) {
  ojson j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["label"] = r.label;
  j["isLattice"] = r.verdict.is_lattice;
  j["alpha"] = surd_json(r.verdict.alpha);
  j["reason"] = to_string(r.verdict.reason);
  if (!r.verdict.is_lattice) return j;
  ojson basis = ojson::array();
  for (auto b : r.basis) basis.push_back(b + 1);
  j["basisIndices"] = basis;
  j["beta"] = r.beta.get_str();
  j["detSurd"] = surd_json(r.det);
  j["detFloat"] = r.det.to_double();
  j["minNormSq"] = r.min_norm_sq.get_str();
  j["minVecCountWithSigns"] = r.min_vec_count_with_signs;
  j["framesAreMinimal"] = r.frames_are_minimal;
  j["basisOfMinimalVectors"] = to_string(r.basis_of_minimal_vectors);
  j["density"] = r.density;
  j["eutactic"] = r.eutaxy.is_strongly_eutactic;
  j["parsevalConstant"] = r.eutaxy.parseval_constant.get_str();
  j["perfect"] = r.perfection.is_perfect;
  j["perfectionRank"] = r.perfection.rank;
  if (r.perfection.det_d) j["detD"] = r.perfection.det_d->get_str();
  return j;
}

// ---------------------------------------------------------------------------
// Summary table
// ---------------------------------------------------------------------------

struct TableRow {
  std::size_t k = 0, n = 0;
  std::string label;
  SurdValue cosine;
  std::optional<AnalysisReport> analysis;  // absent for non-lattices
};

inline std::vector<TableRow> table1(PairProvider& provider, std::size_t simplex_max = 12) {
  std::vector<TableRow> rows;
  auto add = [&](std::size_t k, std::size_t n, const std::string& selector) {
    TableRow row;
    row.k = k;
    row.n = n;
    row.label = selector;
    row.cosine = frame_alpha(k, n).inverse();
    auto rep = analyze_selector(selector, provider);
    if (rep.verdict.is_lattice) row.analysis = std::move(rep);
    rows.push_back(std::move(row));
  };
  for (std::size_t k = 2; k <= simplex_max; ++k) add(k, k + 1, "simplex:" + std::to_string(k));
  add(3, 6, "conference:3");
  add(5, 10, "conference:5:1");
  add(6, 16, "explicit:6x16");
  add(7, 14, "conference:7");
  add(7, 28, "explicit:7x28");
  add(9, 18, "conference:9");
  add(13, 26, "conference:13:1");
  add(25, 50, "conference:25:1");
  return rows;
}

inline std::string format_decimal(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline ojson to_json(const TableRow& row) {
  ojson j;
  j["k"] = row.k;
  j["n"] = row.n;
  j["label"] = row.label;
  j["cosine"] = surd_json(row.cosine);
  j["cosineFloat"] = row.cosine.to_double();
  j["isLattice"] = row.analysis.has_value();
  if (row.analysis) {
    const auto& a = *row.analysis;
    j["volume"] = surd_json(a.det);
    j["volumeFloat"] = a.det.to_double();
    j["framesAreMinimal"] = a.frames_are_minimal;
    j["basisOfMinimalVectors"] = to_string(a.basis_of_minimal_vectors);
    j["perfect"] = a.perfection.is_perfect;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Search report
// ---------------------------------------------------------------------------

struct PairSummary {
  std::size_t index = 0;  // 1-based
  ConferencePair pair;
  BigInt det_d;
  std::optional<BigInt> det_alpha_plus_a, det_alpha_minus_a;  // rational alpha only
  std::optional<bool> n_integral, n_inverse_integral;
};

inline std::vector<PairSummary> summarize_pairs(std::size_t k, const std::vector<ConferencePair>& pairs) {
  std::vector<PairSummary> out;
  const bool rational = frame_alpha(k, 2 * k).is_rational();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    PairSummary s;
    s.index = i + 1;
    s.pair = pairs[i];
    s.det_d = circulant_det(pairs[i].d);
    if (rational) {
      const BigInt alpha = conference_alpha(pairs[i]);
      const long a = alpha.get_si();
      s.det_alpha_plus_a = circulant_det(pairs[i].a, a);
      s.det_alpha_minus_a = circulant_det(-pairs[i].a, a);
      const auto n_row = compute_N(pairs[i], BigRational(alpha), 0, BigRational(alpha));
      s.n_integral = n_row.all_integer();
      try {
        s.n_inverse_integral = circulant_inverse(n_row).all_integer();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularCirculant) throw;
        s.n_inverse_integral = false;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline ojson to_json(const PairSummary& s) {
  ojson j;
  j["index"] = s.index;
  j["aRow"] = format_signs(s.pair.a.values());
  j["dRow"] = format_signs(s.pair.d.values());
  j["detD"] = s.det_d.get_str();
  if (s.det_alpha_plus_a) j["detAlphaIPlusA"] = s.det_alpha_plus_a->get_str();
  if (s.det_alpha_minus_a) j["detAlphaIMinusA"] = s.det_alpha_minus_a->get_str();
  if (s.n_integral) j["nIntegral"] = *s.n_integral;
  if (s.n_inverse_integral) j["nInverseIntegral"] = *s.n_inverse_integral;
  return j;
}

}  // namespace etflat

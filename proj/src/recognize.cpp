#include "splitcircle/recognize.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "splitcircle/model.hpp"
#include "splitcircle/oracle.hpp"
#include "splitcircle/partition.hpp"

namespace splitcircle {

const char* to_string(Status s) {
  switch (s) {
    case Status::Circle: return "Circle";
    case Status::NotCircle: return "NotCircle";
    case Status::NotSplit: return "NotSplit";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  for (Status x : {Status::Circle, Status::NotCircle, Status::NotSplit}) {
    if (s == to_string(x)) return x;
  }
  throw Error(ErrorKind::ParseError, "unknown status '" + s + "'");
}

ChordModel compose_models(const ChordModel& m1, int marker_one, const ChordModel& m2,
                          int marker_two) {
  validate_model(m1);
  validate_model(m2);
  // Rotate each word so that it starts with its marker: m X m Y.
  auto split_at = [](const ChordModel& m, int marker, std::vector<int>& x, std::vector<int>& y) {
    const auto& w = m.word;
    auto first = std::find(w.begin(), w.end(), marker);
    auto second = std::find(first + 1, w.end(), marker);
    if (first == w.end() || second == w.end()) {
      throw Error(ErrorKind::InvalidVertex, "marker chord missing from model");
    }
    x.assign(first + 1, second);
    y.assign(second + 1, w.end());
    y.insert(y.end(), w.begin(), first);
  };
  std::vector<int> p, q, x, y;
  split_at(m1, marker_one, p, q);
  split_at(m2, marker_two, x, y);
  const int n1 = m1.vertex_count();
  auto map1 = [&](int v) { return v < marker_one ? v : v - 1; };
  auto map2 = [&](int v) { return (n1 - 1) + (v < marker_two ? v : v - 1); };
  ChordModel out;
  for (int v : x) out.word.push_back(map2(v));
  for (int v : p) out.word.push_back(map1(v));
  for (int v : y) out.word.push_back(map2(v));
  for (int v : q) out.word.push_back(map1(v));
  return out;
}

namespace {

struct CoreResult {
  bool circle = false;
  std::optional<ChordModel> model;
  std::optional<FscWitness> witness;
};

void record(Trace& trace, const CaseVerdict& v, const std::string& prefix) {
  for (const MatrixCheck& c : v.checks) {
    trace.matrices.push_back({prefix + c.name, c.union_matrix, c.passed, c.reason});
  }
}

CoreResult core(const Graph& g, const RecognizeOptions& opt, Trace& trace,
                const std::string& prefix, int depth);

// Recognition through a split decomposition of g.
CoreResult through_decomposition(const Graph& g, const Decomposition& d,
                                 const RecognizeOptions& opt, Trace& trace,
                                 const std::string& prefix, int depth) {
  trace.matrices.push_back({prefix + "decomposition", false, true,
                            "factors on " + std::to_string(d.factor_one.n()) + " and " +
                                std::to_string(d.factor_two.n()) + " vertices"});
  CoreResult one = core(d.factor_one, opt, trace, prefix + "f1.", depth + 1);
  CoreResult two = core(d.factor_two, opt, trace, prefix + "f2.", depth + 1);
  CoreResult out;
  out.circle = one.circle && two.circle;
  if (out.circle && one.model && two.model) {
    ChordModel composed = compose_models(*one.model, d.marker_one, *two.model, d.marker_two);
    // Composition numbering lists part_one then part_two.
    std::vector<int> original;
    original.insert(original.end(), d.part_one.begin(), d.part_one.end());
    original.insert(original.end(), d.part_two.begin(), d.part_two.end());
    for (int& v : composed.word) v = original[v];
    if (interlacement(composed) == g) out.model = composed;
  }
  return out;
}

CoreResult with_model(const Graph& g, const SplitPartition& sp, const RecognizeOptions& opt) {
  CoreResult r;
  r.circle = true;
  if (opt.build_model) r.model = synthesize_split_model(g, sp);
  return r;
}

CoreResult anchored(const Graph& g, const SplitPartition& sp, const CaseWitness& cw,
                    const RecognizeOptions& opt, Trace& trace, const std::string& prefix,
                    int depth) {
  CoreResult out;
  KResult kr = partition_K(g, sp, cw);
  if (kr.forbidden) {
    out.witness = kr.forbidden->witness;
    trace.matrices.push_back({prefix + "K-partition", false, false, kr.forbidden->reason});
    return out;
  }
  const KPartition& kp = *kr.partition;
  if (kp.kind == CaseKind::CoFourTent && (kp.classes[2].none() || kp.classes[4].none())) {
    if (auto d = reduce_co4tent_prime(g, sp, kp)) {
      return through_decomposition(g, *d, opt, trace, prefix, depth);
    }
  }
  SResult sr = partition_S(g, sp, kp);
  if (sr.forbidden) {
    out.witness = sr.forbidden->witness;
    trace.matrices.push_back({prefix + "S-partition", false, false, sr.forbidden->reason});
    return out;
  }
  CaseMatrices cm = build_case_matrices(g, sp, kp, *sr.partition);
  CaseVerdict v = case_verdict(cm, false);
  record(trace, v, prefix);
  if (cm.forbidden) out.witness = cm.forbidden->witness;
  if (!v.circle_ok) return out;
  // The per-class matrices passed; the global step is the placement of the
  // stable chords around the concatenated class orderings.
  std::string method = "none";
  try {
    BuiltModel b = build_model(g, sp, kp, cm, v);
    out.model = b.model;
    method = b.method;
    out.circle = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalInconsistency) throw;
  }
  trace.matrices.push_back({prefix + "placement", false, out.circle, method});
  if (!opt.build_model) out.model.reset();
  return out;
}

CoreResult core(const Graph& g, const RecognizeOptions& opt, Trace& trace,
                const std::string& prefix, int depth) {
  if (depth > g.n() + 1) throw Error(ErrorKind::InternalInconsistency, "decomposition did not shrink");
  SplitPartition sp = split_partition(g);
  CaseWitness cw = detect_case(g, sp);
  if (trace.case_name.empty()) trace.case_name = to_string(cw.kind);
  switch (cw.kind) {
    case CaseKind::None:
      return with_model(g, sp, opt);
    case CaseKind::Net: {
      NetDispatch nd = dispatch_net(g, sp, cw);
      if (nd.found_four_tent) {
        return anchored(g, sp, {CaseKind::FourTent, nd.four_tent}, opt, trace, prefix, depth);
      }
      if (nd.decomposition) {
        return through_decomposition(g, *nd.decomposition, opt, trace, prefix, depth);
      }
      // No usable split: decide by exact placement search.
      CoreResult r;
      r.model = synthesize_split_model(g, sp);
      r.circle = r.model.has_value();
      trace.matrices.push_back({prefix + "net-search", false, r.circle, "no split around the net"});
      if (!opt.build_model) r.model.reset();
      return r;
    }
    default:
      return anchored(g, sp, cw, opt, trace, prefix, depth);
  }
}

}  // namespace

Verdict recognize(const Graph& g, const RecognizeOptions& options) {
  Verdict v;
  try {
    split_partition(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSplit) throw;
    v.status = Status::NotSplit;
    v.trace.case_name = "none";
    return v;
  }
  CoreResult r = core(g, options, v.trace, "", 0);
  if (r.circle) {
    v.status = Status::Circle;
    v.model = r.model;
    return v;
  }
  v.status = Status::NotCircle;
  if (options.find_witness) {
    if (r.witness && verify_witness(g, *r.witness)) {
      v.witness = r.witness;
    } else {
      v.witness = find_fsc_witness(g);
    }
  }
  return v;
}

std::vector<ProducedDecomposition> collect_decompositions(const Graph& g) {
  std::vector<ProducedDecomposition> out;
  std::function<void(const Graph&)> visit = [&](const Graph& h) {
    if (!is_split_graph(h)) return;
    SplitPartition sp = split_partition(h);
    CaseWitness cw = detect_case(h, sp);
    std::optional<Decomposition> d;
    if (cw.kind == CaseKind::Net) {
      d = dispatch_net(h, sp, cw).decomposition;
    } else if (cw.kind == CaseKind::CoFourTent) {
      KResult kr = partition_K(h, sp, cw);
      if (kr.partition && (kr.partition->classes[2].none() || kr.partition->classes[4].none())) {
        d = reduce_co4tent_prime(h, sp, *kr.partition);
      }
    }
    if (!d) return;
    out.push_back({h, *d});
    visit(d->factor_one);
    visit(d->factor_two);
  };
  visit(g);
  return out;
}

// ---------------------------------------------------------------- JSON

std::string verdict_to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["status"] = to_string(v.status);
  if (v.model) {
    std::string text = format_model(*v.model);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    j["model"] = text;
  }
  if (v.witness) {
    nlohmann::ordered_json w;
    w["family"] = to_string(v.witness->family);
    w["k"] = v.witness->k;
    w["vertices"] = v.witness->vertices;
    j["witness"] = w;
  }
  nlohmann::ordered_json t;
  t["case"] = v.trace.case_name;
  t["matrices"] = nlohmann::ordered_json::array();
  for (const MatrixSummary& m : v.trace.matrices) {
    nlohmann::ordered_json e;
    e["name"] = m.name;
    e[m.union_matrix ? "nested" : "twoNested"] = m.passed;
    if (!m.reason.empty()) e["reason"] = m.reason;
    t["matrices"].push_back(e);
  }
  j["trace"] = t;
  return j.dump();
}

Verdict verdict_from_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    Verdict v;
    v.status = parse_status(j.at("status").get<std::string>());
    if (j.contains("model")) v.model = parse_model(j["model"].get<std::string>());
    if (j.contains("witness")) {
      const auto& w = j["witness"];
      FscWitness fw;
      fw.family = parse_fsc_family(w.at("family").get<std::string>());
      fw.k = w.at("k").get<int>();
      fw.vertices = w.at("vertices").get<std::vector<int>>();
      v.witness = fw;
    }
    const auto& t = j.at("trace");
    v.trace.case_name = t.at("case").get<std::string>();
    for (const auto& e : t.at("matrices")) {
      MatrixSummary m;
      m.name = e.at("name").get<std::string>();
      m.union_matrix = e.contains("nested");
      m.passed = e.at(m.union_matrix ? "nested" : "twoNested").get<bool>();
      if (e.contains("reason")) m.reason = e["reason"].get<std::string>();
      v.trace.matrices.push_back(m);
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace splitcircle

#pragma once

// JSON encodings of the domain types. Schemas are stable across runs:
//   Partition        [3,2,1]            ([] is the empty diagram)
//   TripleIndex      [m,n,p]
//   SymElement       [{"partition":[...],"coeff":c},...]
//   SymTensor        [{"partitions":[[...],...],"coeff":c},...]
//   Simple/Injective {"lambda":[...],"mu":[...],"nu":[...]}
//   Layer            [{"simple":{...},"mult":c},...]
//   Filtration       {"injective":{...},"layers":[Layer,...]}

#include <json.hpp>

#include "t3/category.hpp"
#include "t3/partition.hpp"
#include "t3/poset.hpp"
#include "t3/sym_element.hpp"
#include "t3/verify.hpp"

namespace t3 {

using json = nlohmann::json;

inline json encode(const Partition& la) { return json(la.parts()); }

inline Partition decode_partition(const json& j) {
  return Partition(j.get<std::vector<int>>());
}

inline json encode(const TripleIndex& i) { return json::array({i.m, i.n, i.p}); }

inline TripleIndex decode_triple(const json& j) {
  auto v = j.get<std::vector<int>>();
  if (v.size() != 3) throw std::invalid_argument("triple index must have three components");
  return {v[0], v[1], v[2]};
}

inline json encode(const SymElement& e) {
  json out = json::array();
  for (const auto& [la, c] : e.terms())
    out.push_back({{"partition", encode(la)}, {"coeff", c}});
  return out;
}

inline SymElement decode_sym_element(const json& j) {
  SymElement e;
  for (const auto& term : j)
    e.add_term(decode_partition(term.at("partition")), term.at("coeff").get<std::int64_t>());
  return e;
}

inline json encode(const SymTensor& t) {
  json out = json::array();
  for (const auto& [key, c] : t.terms()) {
    json parts = json::array();
    for (const Partition& la : key) parts.push_back(encode(la));
    out.push_back({{"partitions", parts}, {"coeff", c}});
  }
  return out;
}

inline SymTensor decode_sym_tensor(const json& j, std::size_t arity) {
  SymTensor t(arity);
  for (const auto& term : j) {
    std::vector<Partition> key;
    for (const auto& la : term.at("partitions")) key.push_back(decode_partition(la));
    t.add_term(std::move(key), term.at("coeff").get<std::int64_t>());
  }
  return t;
}

inline json encode(const SimpleLabel& s) {
  return {{"lambda", encode(s.lambda)}, {"mu", encode(s.mu)}, {"nu", encode(s.nu)}};
}

inline json encode(const InjectiveLabel& i) {
  return {{"lambda", encode(i.lambda)}, {"mu", encode(i.mu)}, {"nu", encode(i.nu)}};
}

inline SimpleLabel decode_simple_label(const json& j) {
  return {decode_partition(j.at("lambda")), decode_partition(j.at("mu")),
          decode_partition(j.at("nu"))};
}

inline InjectiveLabel decode_injective_label(const json& j) {
  return {decode_partition(j.at("lambda")), decode_partition(j.at("mu")),
          decode_partition(j.at("nu"))};
}

inline json encode(const Layer& layer) {
  json out = json::array();
  for (const auto& [s, mult] : layer) out.push_back({{"simple", encode(s)}, {"mult", mult}});
  return out;
}

inline Layer decode_layer(const json& j) {
  Layer layer;
  for (const auto& entry : j)
    layer.emplace(decode_simple_label(entry.at("simple")), entry.at("mult").get<std::int64_t>());
  return layer;
}

inline json encode(const PairLabel& s) {
  return {{"mu", encode(s.mu)}, {"nu", encode(s.nu)}};
}

inline json encode(const Layer2& layer) {
  json out = json::array();
  for (const auto& [s, mult] : layer) out.push_back({{"simple", encode(s)}, {"mult", mult}});
  return out;
}

inline json encode(const Filtration& f) {
  json layers = json::array();
  for (const Layer& layer : f.layers) layers.push_back(encode(layer));
  return {{"injective", encode(f.injective)}, {"layers", layers}};
}

inline Filtration decode_filtration(const json& j) {
  Filtration f{decode_injective_label(j.at("injective")), {}};
  for (const auto& layer : j.at("layers")) f.layers.push_back(decode_layer(layer));
  return f;
}

inline json encode(const VerifyReport& report) {
  json invs = json::array();
  for (const InvariantResult& r : report.invariants)
    invs.push_back({{"name", r.name},
                    {"checks", r.checks},
                    {"passed", r.passed()},
                    {"first_failure", r.first_failure}});
  return {{"max_boxes", report.max_boxes},
          {"invariants", invs},
          {"all_passed", report.all_passed()}};
}

}  // namespace t3

#include "agriont/graph.hpp"

#include <algorithm>
#include <set>

namespace agriont {

std::optional<Iri> PrefixMap::lookup(const std::string& prefix) const {
  auto it = bindings_.find(prefix);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

Iri PrefixMap::expand(const std::string& curie) const {
  auto colon = curie.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("not a prefixed name (no colon): " + curie);
  std::string prefix = curie.substr(0, colon);
  std::string local = curie.substr(colon + 1);
  auto ns = lookup(prefix);
  if (!ns)
    throw std::invalid_argument("undeclared prefix '" + prefix + ":'");
  return Iri(ns->value() + local);
}

std::string PrefixMap::compact(const Iri& iri) const {
  const std::string& full = iri.value();
  const std::string* bestPrefix = nullptr;
  std::size_t bestLen = 0;
  for (const auto& [prefix, ns] : bindings_) {
    const std::string& n = ns.value();
    if (n.size() > bestLen && full.size() > n.size() &&
        full.compare(0, n.size(), n) == 0) {
      // Local part must not itself contain separators that would not
      // round-trip through a prefixed name.
      std::string local = full.substr(n.size());
      if (local.find_first_of("/#:") != std::string::npos) continue;
      bestPrefix = &prefix;
      bestLen = n.size();
    }
  }
  if (!bestPrefix) return "<" + full + ">";
  return *bestPrefix + ":" + full.substr(bestLen);
}

void PrefixMap::mergeFrom(const PrefixMap& other) {
  for (const auto& [prefix, ns] : other.bindings_) bindings_[prefix] = ns;
}

bool Graph::insert(const Triple& t, bool inferred) {
  if (t.subject.isLiteral())
    throw std::invalid_argument("literal in subject position");
  auto it = byTriple_.find(t);
  if (it != byTriple_.end()) {
    Rec& rec = records_[it->second];
    if (rec.live) {
      // Re-asserting an inferred triple upgrades it to asserted.
      if (!inferred) rec.inferred = false;
      return false;
    }
    rec.live = true;
    rec.inferred = inferred;
    ++live_;
    return true;
  }
  auto noteBlank = [&](const Term& term) {
    if (!term.isBlank()) return;
    const std::string& label = term.blank().label;
    if (label.size() < 2 || label[0] != 'b') return;
    if (label.find_first_not_of("0123456789", 1) != std::string::npos) return;
    // Keep the mint counter ahead of any externally supplied bN label.
    std::size_t n = std::stoull(label.substr(1));
    if (n >= blankCounter_) blankCounter_ = n + 1;
  };
  noteBlank(t.subject);
  noteBlank(t.object);
  std::size_t idx = records_.size();
  records_.push_back({t, inferred, true});
  byTriple_.emplace(t, idx);
  bySubject_[t.subject].push_back(idx);
  byPredicate_[t.predicate.value()].push_back(idx);
  byObject_[t.object].push_back(idx);
  ++live_;
  return true;
}

bool Graph::remove(const Triple& t) {
  auto it = byTriple_.find(t);
  if (it == byTriple_.end() || !records_[it->second].live) return false;
  records_[it->second].live = false;
  --live_;
  return true;
}

bool Graph::contains(const Triple& t) const {
  auto it = byTriple_.find(t);
  return it != byTriple_.end() && records_[it->second].live;
}

bool Graph::isInferred(const Triple& t) const {
  auto it = byTriple_.find(t);
  return it != byTriple_.end() && records_[it->second].live &&
         records_[it->second].inferred;
}

void Graph::appendMatches(const std::vector<std::size_t>& bucket,
                          const TriplePatternQuery& q,
                          std::vector<Triple>& out) const {
  for (std::size_t idx : bucket) {
    const Rec& rec = records_[idx];
    if (!rec.live) continue;
    if (q.subject && rec.triple.subject != *q.subject) continue;
    if (q.predicate && rec.triple.predicate != *q.predicate) continue;
    if (q.object && rec.triple.object != *q.object) continue;
    out.push_back(rec.triple);
  }
}

std::vector<Triple> Graph::match(const TriplePatternQuery& q) const {
  std::vector<Triple> out;
  if (q.subject) {
    auto it = bySubject_.find(*q.subject);
    if (it != bySubject_.end()) appendMatches(it->second, q, out);
    return out;
  }
  if (q.predicate) {
    auto it = byPredicate_.find(q.predicate->value());
    if (it != byPredicate_.end()) appendMatches(it->second, q, out);
    return out;
  }
  if (q.object) {
    auto it = byObject_.find(*q.object);
    if (it != byObject_.end()) appendMatches(it->second, q, out);
    return out;
  }
  for (const Rec& rec : records_)
    if (rec.live) out.push_back(rec.triple);
  return out;
}

std::vector<Triple> Graph::triples() const { return match({}); }

std::vector<Triple> Graph::assertedTriples() const {
  std::vector<Triple> out;
  for (const Rec& rec : records_)
    if (rec.live && !rec.inferred) out.push_back(rec.triple);
  return out;
}

bool Graph::auditIndexes() const {
  std::set<Triple> base;
  for (const Rec& rec : records_)
    if (rec.live) base.insert(rec.triple);
  auto collect = [&](auto& index) {
    std::set<Triple> got;
    for (const auto& [key, bucket] : index)
      for (std::size_t idx : bucket)
        if (records_[idx].live) got.insert(records_[idx].triple);
    return got == base;
  };
  return base.size() == live_ && collect(bySubject_) &&
         collect(byPredicate_) && collect(byObject_);
}

BlankNode Graph::mintBlankNode() {
  return BlankNode{"b" + std::to_string(blankCounter_++)};
}

}  // namespace agriont

#include "mopoly/multi_index.hpp"

#include <sstream>

#include "mopoly/error.hpp"

namespace mopoly {

MultiIndex::MultiIndex(std::vector<long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ContractError("MultiIndex: requires r >= 1");
  for (long e : entries_)
    if (e < 0) throw ContractError("MultiIndex: negative entry");
}

MultiIndex MultiIndex::zeros(int r) {
  if (r < 1) throw ContractError("MultiIndex: requires r >= 1");
  return MultiIndex(std::vector<long>(static_cast<size_t>(r), 0));
}

long MultiIndex::length() const {
  long sum = 0;
  for (long e : entries_) sum += e;
  return sum;
}

long MultiIndex::operator[](int j) const {
  if (j < 0 || j >= r()) throw ContractError("MultiIndex: component out of range");
  return entries_[static_cast<size_t>(j)];
}

MultiIndex MultiIndex::plus(int k) const {
  if (k < 0 || k >= r()) throw ContractError("MultiIndex: direction out of range");
  std::vector<long> e = entries_;
  ++e[static_cast<size_t>(k)];
  return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::minus(int j) const {
  if (j < 0 || j >= r()) throw ContractError("MultiIndex: direction out of range");
  if (entries_[static_cast<size_t>(j)] == 0) return std::nullopt;
  std::vector<long> e = entries_;
  --e[static_cast<size_t>(j)];
  return MultiIndex(std::move(e));
}

std::string to_string(const MultiIndex& n) {
  std::ostringstream out;
  out << "(";
  for (int j = 0; j < n.r(); ++j) {
    if (j > 0) out << ",";
    out << n[j];
  }
  out << ")";
  return out.str();
}

namespace {

void enumerate_sum(int r, long total, std::vector<long>& prefix,
                   std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == r - 1) {
    prefix.push_back(total);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (long v = total; v >= 0; --v) {
    prefix.push_back(v);
    enumerate_sum(r, total - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> lattice_below(int r, long max_len) {
  if (r < 1) throw ContractError("lattice_below: requires r >= 1");
  if (max_len < 0) throw ContractError("lattice_below: negative bound");
  std::vector<MultiIndex> out;
  std::vector<long> prefix;
  for (long total = 0; total <= max_len; ++total)
    enumerate_sum(r, total, prefix, out);
  return out;
}

}  // namespace mopoly

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace lrc {

// DFA used only for counting accepted words. delta[state][letter] = -1 marks a
// missing transition (implicit dead state).
struct CountingAutomaton {
  int states = 0;
  std::vector<std::string> alphabet;
  int start = 0;
  std::vector<char> accepting;
  std::vector<std::vector<int>> delta;

  int letters() const { return static_cast<int>(alphabet.size()); }
  bool partial() const;
  void validate() const;  // throws SpecError
};

// census[i][m] = number of accepted m-words read from state i, m = 0..L.
using Census = std::vector<std::vector<mpz_class>>;
Census census(const CountingAutomaton& a, int L);

// Adds an explicit non-accepting sink for missing transitions (no-op if the
// automaton is already complete).
CountingAutomaton complete(const CountingAutomaton& a);

enum class MergeMode { Weak, Complete };

// Merges states whose censuses agree up to horizon 2n (n = states after
// completion); the lowest index represents each class. A class whose census
// is identically zero is removed again, its arcs becoming missing transitions.
// Not guaranteed to reach the smallest weakly equivalent automaton.
CountingAutomaton weak_minimize(const CountingAutomaton& a, MergeMode mode = MergeMode::Weak);

struct AgreementVerdict {
  bool equivalent = false;
  int horizon = 0;             // a + b
  int first_disagreement = -1; // smallest m with differing counts, or -1
};
// Start-state censuses compared for m = 0..a+b, which decides weak
// equivalence since each sequence obeys a linear recurrence of degree <= its
// state count.
AgreementVerdict agreement_bound_check(const CountingAutomaton& a, const CountingAutomaton& b);
AgreementVerdict agreement_bound_check(const std::vector<mpz_class>& f, int a_states,
                                       const std::vector<mpz_class>& g, int b_states);

// Per-state counts keyed by letter-multiplicity vectors of total <= L.
using CompleteCensus = std::vector<std::map<std::vector<int>, mpz_class>>;
CompleteCensus complete_census(const CountingAutomaton& a, int L, std::size_t cap = 5'000'000);

std::string automaton_to_json(const CountingAutomaton& a);
CountingAutomaton automaton_from_json(const std::string& text);

}  // namespace lrc

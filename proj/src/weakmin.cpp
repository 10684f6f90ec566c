#include "lrc/weakmin.hpp"

#include <algorithm>
#include <json.hpp>

#include "lrc/group.hpp"

namespace lrc {

bool CountingAutomaton::partial() const {
  for (const auto& row : delta)
    for (int t : row)
      if (t < 0) return true;
  return false;
}

void CountingAutomaton::validate() const {
  if (states < 1) throw SpecError("automaton needs at least one state");
  if (start < 0 || start >= states) throw SpecError("start state out of range");
  if (static_cast<int>(accepting.size()) != states || static_cast<int>(delta.size()) != states)
    throw SpecError("accepting/delta size does not match state count");
  for (const auto& row : delta) {
    if (static_cast<int>(row.size()) != letters()) throw SpecError("delta row size does not match alphabet");
    for (int t : row)
      if (t < -1 || t >= states) throw SpecError("transition target out of range");
  }
}

Census census(const CountingAutomaton& a, int L) {
  a.validate();
  if (L < 0) throw SpecError("census horizon must be nonnegative");
  Census f(a.states, std::vector<mpz_class>(L + 1, 0));
  for (int i = 0; i < a.states; ++i) f[i][0] = a.accepting[i] ? 1 : 0;
  for (int m = 1; m <= L; ++m)
    for (int i = 0; i < a.states; ++i)
      for (int t : a.delta[i])
        if (t >= 0) f[i][m] += f[t][m - 1];
  return f;
}

CountingAutomaton complete(const CountingAutomaton& a) {
  a.validate();
  if (!a.partial()) return a;
  CountingAutomaton c = a;
  const int dead = c.states++;
  c.accepting.push_back(0);
  c.delta.push_back(std::vector<int>(c.letters(), dead));
  for (auto& row : c.delta)
    for (int& t : row)
      if (t < 0) t = dead;
  return c;
}

CompleteCensus complete_census(const CountingAutomaton& a, int L, std::size_t cap) {
  a.validate();
  const int k = a.letters();
  // vectors of total exactly s, grouped by s
  std::vector<std::vector<std::vector<int>>> layers(L + 1);
  layers[0].push_back(std::vector<int>(k, 0));
  std::size_t total = 1;
  for (int s = 1; s <= L; ++s) {
    for (const auto& v : layers[s - 1])
      for (int l = 0; l < k; ++l) {
        // generate each vector once: only bump letters at or after the last nonzero
        int last = -1;
        for (int x = 0; x < k; ++x)
          if (v[x]) last = x;
        if (l < last) continue;
        auto w = v;
        ++w[l];
        layers[s].push_back(std::move(w));
      }
    total += layers[s].size();
    if (total * static_cast<std::size_t>(a.states) > cap) throw CapError("complete census exceeds cap");
  }
  CompleteCensus f(a.states);
  for (int i = 0; i < a.states; ++i) f[i][layers[0][0]] = a.accepting[i] ? 1 : 0;
  for (int s = 1; s <= L; ++s)
    for (const auto& v : layers[s])
      for (int i = 0; i < a.states; ++i) {
        mpz_class c = 0;
        for (int l = 0; l < k; ++l) {
          const int t = a.delta[i][l];
          if (t < 0 || v[l] == 0) continue;
          auto w = v;
          --w[l];
          c += f[t].at(w);
        }
        f[i][v] = c;
      }
  return f;
}

CountingAutomaton weak_minimize(const CountingAutomaton& in, MergeMode mode) {
  const CountingAutomaton a = complete(in);
  const int n = a.states, L = 2 * n;
  std::vector<int> cls(n, -1), reps;
  std::vector<char> zero(n, 0);
  if (mode == MergeMode::Weak) {
    const Census f = census(a, L);
    for (int i = 0; i < n; ++i) {
      zero[i] = std::all_of(f[i].begin(), f[i].end(), [](const mpz_class& x) { return sgn(x) == 0; });
      for (std::size_t c = 0; c < reps.size() && cls[i] < 0; ++c)
        if (f[reps[c]] == f[i]) cls[i] = static_cast<int>(c);
      if (cls[i] < 0) {
        cls[i] = static_cast<int>(reps.size());
        reps.push_back(i);
      }
    }
  } else {
    const CompleteCensus f = complete_census(a, L);
    for (int i = 0; i < n; ++i) {
      zero[i] = std::all_of(f[i].begin(), f[i].end(), [](const auto& kv) { return sgn(kv.second) == 0; });
      for (std::size_t c = 0; c < reps.size() && cls[i] < 0; ++c)
        if (f[reps[c]] == f[i]) cls[i] = static_cast<int>(c);
      if (cls[i] < 0) {
        cls[i] = static_cast<int>(reps.size());
        reps.push_back(i);
      }
    }
  }
  // drop the dead class unless it holds the start state
  int dead = -1;
  for (std::size_t c = 0; c < reps.size(); ++c)
    if (zero[reps[c]] && cls[a.start] != static_cast<int>(c)) dead = static_cast<int>(c);
  std::vector<int> newid(reps.size(), -1);
  int next = 0;
  for (std::size_t c = 0; c < reps.size(); ++c)
    if (static_cast<int>(c) != dead) newid[c] = next++;
  CountingAutomaton r;
  r.states = next;
  r.alphabet = a.alphabet;
  r.start = newid[cls[a.start]];
  r.accepting.assign(next, 0);
  r.delta.assign(next, std::vector<int>(a.letters(), -1));
  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (newid[c] < 0) continue;
    const int s = newid[c];
    r.accepting[s] = a.accepting[reps[c]];
    for (int l = 0; l < a.letters(); ++l) r.delta[s][l] = newid[cls[a.delta[reps[c]][l]]];
  }
  return r;
}

AgreementVerdict agreement_bound_check(const std::vector<mpz_class>& f, int a_states,
                                       const std::vector<mpz_class>& g, int b_states) {
  AgreementVerdict v;
  v.horizon = a_states + b_states;
  if (static_cast<int>(f.size()) <= v.horizon || static_cast<int>(g.size()) <= v.horizon)
    throw SpecError("census shorter than the agreement horizon");
  for (int m = 0; m <= v.horizon; ++m)
    if (f[m] != g[m]) {
      v.first_disagreement = m;
      return v;
    }
  v.equivalent = true;
  return v;
}

AgreementVerdict agreement_bound_check(const CountingAutomaton& a, const CountingAutomaton& b) {
  // sizes after completion bound the recurrence degrees
  const CountingAutomaton ca = complete(a), cb = complete(b);
  const int h = ca.states + cb.states;
  return agreement_bound_check(census(ca, h)[ca.start], ca.states, census(cb, h)[cb.start], cb.states);
}

std::string automaton_to_json(const CountingAutomaton& a) {
  nlohmann::json j;
  j["states"] = a.states;
  j["alphabet"] = a.alphabet;
  j["start"] = a.start;
  std::vector<int> acc;
  for (int i = 0; i < a.states; ++i)
    if (a.accepting[i]) acc.push_back(i);
  j["accepting"] = acc;
  nlohmann::json d = nlohmann::json::array();
  for (const auto& row : a.delta) {
    nlohmann::json jr = nlohmann::json::array();
    for (int t : row) jr.push_back(t < 0 ? nlohmann::json(nullptr) : nlohmann::json(t));
    d.push_back(jr);
  }
  j["delta"] = d;
  return j.dump(2);
}

CountingAutomaton automaton_from_json(const std::string& text) {
  CountingAutomaton a;
  try {
    const auto j = nlohmann::json::parse(text);
    a.states = j.at("states").get<int>();
    for (const auto& l : j.at("alphabet")) a.alphabet.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    a.start = j.at("start").get<int>();
    a.accepting.assign(a.states, 0);
    for (const auto& s : j.at("accepting")) {
      const int i = s.get<int>();
      if (i < 0 || i >= a.states) throw SpecError("accepting state out of range");
      a.accepting[i] = 1;
    }
    for (const auto& row : j.at("delta")) {
      std::vector<int> r;
      for (const auto& t : row) r.push_back(t.is_null() ? -1 : t.get<int>());
      a.delta.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("bad automaton json: ") + e.what());
  }
  a.validate();
  return a;
}

}  // namespace lrc

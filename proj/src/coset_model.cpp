#include "coset_model.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "errors.hpp"

namespace windmill {

CosetModel::CosetModel(GroupSig sig) : sig_(std::move(sig)) {
  if (sig_.arity() != 2) throw InputError("coset model needs exactly two generators");
}

Coset CosetModel::canonical(int side, const Word& g) const {
  Coset c;
  c.side = side;
  c.rep = g;
  if (!c.rep.letters.empty() && c.rep.letters.back().gen == side) c.rep.letters.pop_back();
  return c;
}

Coset CosetModel::act(const Word& g, const Coset& v) const {
  return canonical(v.side, word_mul(sig_, g, v.rep));
}

namespace {

// Block prefixes of w: the cosets visited by the geodesic are determined by
// consuming blocks of w whose generator matches the current side.
struct Peeler {
  const GroupSig& sig;
  const Word& w;
  std::size_t next = 0;
  Word prefix;

  bool consume_if(int gen) {
    if (next >= w.letters.size() || w.letters[next].gen != gen) return false;
    prefix = word_mul(sig, prefix, word_letter(sig, gen, w.letters[next].exp));
    ++next;
    return true;
  }
  bool done() const { return next >= w.letters.size(); }
};

}  // namespace

std::vector<Coset> CosetModel::geodesic(const Coset& x, const Coset& z) const {
  Word w = word_mul(sig_, word_inv(sig_, x.rep), z.rep);
  Peeler peel{sig_, w};
  std::vector<Coset> path;
  Coset cur = x;
  path.push_back(cur);
  while (!(cur == z)) {
    int next_side = 1 - cur.side;
    peel.consume_if(cur.side);
    cur = canonical(next_side, word_mul(sig_, x.rep, peel.prefix));
    path.push_back(cur);
    if (path.size() > w.letters.size() * 2 + 4)
      throw InputError("coset geodesic failed to terminate");
  }
  return path;
}

int CosetModel::distance(const Coset& x, const Coset& z) const {
  return static_cast<int>(geodesic(x, z).size()) - 1;
}

bool CosetModel::on_geodesic(const Coset& y, const Coset& x, const Coset& z) const {
  for (const Coset& v : geodesic(x, z))
    if (v == y) return true;
  return false;
}

Word CosetModel::stabilizer_generator(const Coset& v) const {
  return word_conj(sig_, v.rep, word_letter(sig_, v.side, 1));
}

std::vector<Coset> CosetModel::neighbors(const Coset& v, int exp_bound) const {
  std::vector<Coset> out;
  int order = sig_.orders[static_cast<std::size_t>(v.side)];
  std::vector<long long> exps;
  exps.push_back(0);
  if (order == 0) {
    for (int e = 1; e <= exp_bound; ++e) {
      exps.push_back(e);
      exps.push_back(-e);
    }
  } else {
    for (int e = 1; e < order; ++e) exps.push_back(e);
  }
  for (long long e : exps) {
    Word g = word_mul(sig_, v.rep, word_letter(sig_, v.side, e));
    out.push_back(canonical(1 - v.side, g));
  }
  std::sort(out.begin(), out.end(), CosetLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Coset> CosetModel::ball(const Coset& v0, int radius, int exp_bound) const {
  std::set<Coset, CosetLess> seen{v0};
  std::deque<std::pair<Coset, int>> queue{{v0, 0}};
  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    if (d == radius) continue;
    for (const Coset& w : neighbors(v, exp_bound))
      if (seen.insert(w).second) queue.emplace_back(w, d + 1);
  }
  return {seen.begin(), seen.end()};
}

long long CosetModel::gate_offset(const Coset& alpha, const Coset& beta) const {
  if (alpha == beta) throw InputError("gate offset of an axis on itself is undefined");
  Word w = word_mul(sig_, word_inv(sig_, alpha.rep), beta.rep);
  // Line of alpha = {rep * s^k}. The Cayley geodesic from rep * w * (line of
  // beta) back to alpha's line leaves through the leading s-block of w.
  if (!w.letters.empty() && w.letters.front().gen == alpha.side) return w.letters.front().exp;
  return 0;
}

std::string CosetModel::label(const Coset& v) const {
  std::string s(1, sig_.names[static_cast<std::size_t>(v.side)]);
  s += ":";
  s += word_str(sig_, v.rep);
  return s;
}

Coset CosetModel::parse_label(const std::string& text) const {
  auto colon = text.find(':');
  if (colon != 1) throw InputError("coset label must look like 'a:word': '" + text + "'");
  int side = -1;
  for (int i = 0; i < sig_.arity(); ++i)
    if (sig_.names[static_cast<std::size_t>(i)] == text[0]) side = i;
  if (side < 0) throw InputError("unknown subgroup side in coset label '" + text + "'");
  return canonical(side, parse_word(sig_, text.substr(2)));
}

}  // namespace windmill

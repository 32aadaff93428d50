#include "group_action.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "parallel.hpp"

namespace windmill {

Word QuotientOracle::image(const Word& action_word) const {
  Word out;
  for (const Letter& l : action_word.letters)
    out = word_mul(target, out, word_pow(target, gen_images[static_cast<std::size_t>(l.gen)], l.exp));
  return out;
}

GroupAction::GroupAction(int degree, std::vector<Generator> gens,
                         std::optional<QuotientOracle> oracle)
    : degree_(degree), gens_(std::move(gens)), oracle_(std::move(oracle)) {
  if (degree_ <= 0) throw InputError("action degree must be positive");
  std::set<char> names;
  for (auto& g : gens_) {
    if (g.name.size() != 1 || !std::islower(static_cast<unsigned char>(g.name[0])))
      throw InputError("generator names must be single lowercase letters: '" + g.name + "'");
    if (!names.insert(g.name[0]).second) throw InputError("duplicate generator name " + g.name);
    if (static_cast<int>(g.image.size()) != degree_)
      throw InputError("generator " + g.name + " image size mismatch");
    std::vector<char> hit(static_cast<std::size_t>(degree_), 0);
    for (int v : g.image) {
      if (v < -1 || v >= degree_) throw InputError("generator " + g.name + " image out of range");
      if (v >= 0) {
        if (hit[static_cast<std::size_t>(v)])
          throw InputError("generator " + g.name + " is not injective");
        hit[static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  sig_.orders.assign(gens_.size(), 0);
  for (const auto& g : gens_) sig_.names.push_back(g.name[0]);
  inverse_.assign(gens_.size(), std::vector<int>(static_cast<std::size_t>(degree_), -1));
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (int v = 0; v < degree_; ++v) {
      int w = gens_[i].image[static_cast<std::size_t>(v)];
      if (w >= 0) inverse_[i][static_cast<std::size_t>(w)] = v;
    }
  if (oracle_ && static_cast<int>(oracle_->gen_images.size()) != gen_count())
    throw InputError("quotient oracle must map every generator");
}

int GroupAction::apply(const Word& w, int v) const {
  // Rightmost letter acts first.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto& fwd = gens_[static_cast<std::size_t>(it->gen)].image;
    const auto& bwd = inverse_[static_cast<std::size_t>(it->gen)];
    long long reps = it->exp < 0 ? -it->exp : it->exp;
    for (long long r = 0; r < reps && v >= 0; ++r)
      v = it->exp > 0 ? fwd[static_cast<std::size_t>(v)] : bwd[static_cast<std::size_t>(v)];
    if (v < 0) return -1;
  }
  return v;
}

std::vector<int> GroupAction::apply_all(const Word& w) const {
  std::vector<int> out(static_cast<std::size_t>(degree_));
  for (int v = 0; v < degree_; ++v) out[static_cast<std::size_t>(v)] = apply(w, v);
  return out;
}

std::optional<bool> GroupAction::is_trivial(const Word& w) const {
  if (w.is_identity()) return true;
  bool moved_any = false, undefined_any = false;
  for (int v = 0; v < degree_; ++v) {
    int img = apply(w, v);
    if (img < 0)
      undefined_any = true;
    else if (img != v)
      moved_any = true;
  }
  if (moved_any) return false;
  if (oracle_) {
    Word img = oracle_->image(w);
    if (!img.is_identity()) return false;
    if (oracle_->faithful) return true;
  }
  if (!undefined_any) return true;  // total permutation fixing everything
  return std::nullopt;
}

std::string GroupAction::word_key(const Word& w) const {
  if (oracle_ && oracle_->faithful) return word_str(oracle_->target, oracle_->image(w));
  std::string s;
  for (int v : apply_all(w)) {
    s += std::to_string(v);
    s += ',';
  }
  return s;
}

bool GroupAction::compatible(const Word& a, const Word& b, bool& fully_compared) const {
  if (oracle_ && oracle_->faithful) {
    fully_compared = true;
    return word_key(a) == word_key(b);
  }
  fully_compared = true;
  for (int v = 0; v < degree_; ++v) {
    int ia = apply(a, v), ib = apply(b, v);
    if (ia < 0 || ib < 0) {
      fully_compared = false;
      continue;
    }
    if (ia != ib) return false;
  }
  return true;
}

std::vector<Word> GroupAction::words_up_to(int bound) const {
  std::vector<Word> out;
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (int g = 0; g < gen_count(); ++g)
        for (long long e : {1LL, -1LL}) {
          if (!w.letters.empty() && w.letters.back().gen == g &&
              ((w.letters.back().exp > 0) != (e > 0)))
            continue;  // would cancel
          Word v = word_mul(sig_, w, word_letter(sig_, g, e));
          next.push_back(v);
        }
    std::sort(next.begin(), next.end(), WordLess{});
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

InvarianceReport check_invariance(const GroupAction& a, const DistanceSystem& ds, int word_bound) {
  if (a.degree() != ds.size()) throw InputError("action degree does not match distance system");
  InvarianceReport rep;
  rep.word_bound = word_bound;
  auto words = a.words_up_to(word_bound);
  rep.words_tested = static_cast<long long>(words.size());
  const int n = ds.size();

  auto scan = [&](std::size_t begin, std::size_t end) {
    InvarianceReport local;
    for (std::size_t wi = begin; wi < end; ++wi) {
      auto img = a.apply_all(words[wi]);
      for (int y = 0; y < n; ++y) {
        if (img[static_cast<std::size_t>(y)] < 0) continue;
        for (int x = 0; x < n; ++x) {
          if (x == y) continue;
          for (int z = x; z < n; ++z) {
            if (z == y) continue;
            int gy = img[static_cast<std::size_t>(y)];
            int gx = img[static_cast<std::size_t>(x)];
            int gz = img[static_cast<std::size_t>(z)];
            if (gx < 0 || gz < 0) {
              ++local.entries_skipped;
              continue;
            }
            ++local.entries_checked;
            Rat lhs = ds.at(gy, gx, gz);
            Rat rhs = ds.at(y, x, z);
            if (lhs != rhs) {
              ++local.violations;
              if (local.witnesses.size() < 8)
                local.witnesses.push_back(
                    {"invariance", "g=" + a.str(words[wi]) + " (y,x,z)=(" + std::to_string(y) +
                                       "," + std::to_string(x) + "," + std::to_string(z) +
                                       ") d=" + format_rat(rhs) + " d^g=" + format_rat(lhs)});
            }
          }
        }
      }
    }
    return local;
  };
  auto chunks = map_chunks<InvarianceReport>(words.size(), scan);
  for (const auto& c : chunks) {
    rep.entries_checked += c.entries_checked;
    rep.entries_skipped += c.entries_skipped;
    rep.violations += c.violations;
    for (const auto& w : c.witnesses)
      if (rep.witnesses.size() < 8) rep.witnesses.push_back(w);
  }
  rep.pass = rep.violations == 0;
  return rep;
}

EquivarianceReport check_equivariance(const VertexFamily& fam, const GroupAction& a,
                                      int word_bound) {
  EquivarianceReport rep;
  rep.word_bound = word_bound;
  auto words = a.words_up_to(word_bound);

  // Generator sets match when every element of one side is compatible with
  // some element of the other. With a faithful oracle this is set equality;
  // on bare truncations it is equality wherever both sides are defined.
  auto sets_match = [&](const std::vector<Word>& lhs, const std::vector<Word>& rhs,
                        bool& solid) {
    solid = true;
    auto covered = [&](const std::vector<Word>& from, const std::vector<Word>& to) {
      for (const Word& x : from) {
        bool found = false;
        for (const Word& y : to) {
          bool full = false;
          if (a.compatible(x, y, full)) {
            found = true;
            solid = solid && full;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    };
    return covered(lhs, rhs) && covered(rhs, lhs);
  };

  for (const Word& g : words) {
    for (const auto& [v, gens] : fam.assignments) {
      int gv = a.apply(g, v);
      if (gv < 0) {
        ++rep.pairs_skipped;
        continue;
      }
      if (!fam.has(gv)) continue;  // no explicit assignment to compare against
      ++rep.pairs_checked;
      std::vector<Word> conjugated;
      for (const Word& r : gens) conjugated.push_back(word_conj(a.word_sig(), g, r));
      bool solid = true;
      if (!sets_match(conjugated, fam.at(gv), solid)) {
        ++rep.violations;
        if (rep.witnesses.size() < 8)
          rep.witnesses.push_back({"equivariance", "g=" + a.str(g) + " v=" + std::to_string(v) +
                                                       " gv=" + std::to_string(gv)});
      } else if (!solid) {
        ++rep.pairs_skipped;
      }
    }
  }
  rep.pass = rep.violations == 0;
  return rep;
}

namespace {

// Nontrivial elements of the subgroup generated by `gens`, as words up to the
// letter bound, deduplicated by their action (or oracle image) when decidable.
std::vector<Word> subgroup_elements(const GroupAction& a, const std::vector<Word>& gens,
                                    int word_bound, long long& inconclusive) {
  GroupSig symbol_sig = GroupSig::free_group(static_cast<int>(gens.size()));
  std::vector<Word> symbol_words;
  {
    std::vector<Word> frontier{Word{}};
    for (int len = 1; len <= word_bound; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier)
        for (int g = 0; g < symbol_sig.arity(); ++g)
          for (long long e : {1LL, -1LL}) {
            if (!w.letters.empty() && w.letters.back().gen == g &&
                ((w.letters.back().exp > 0) != (e > 0)))
              continue;
            next.push_back(word_mul(symbol_sig, w, word_letter(symbol_sig, g, e)));
          }
      std::sort(next.begin(), next.end(), WordLess{});
      next.erase(std::unique(next.begin(), next.end()), next.end());
      symbol_words.insert(symbol_words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }
  std::vector<Word> out;
  std::set<std::string> seen;
  for (const Word& sw : symbol_words) {
    Word h;
    for (const Letter& l : sw.letters)
      h = word_mul(a.word_sig(), h,
                   word_pow(a.word_sig(), gens[static_cast<std::size_t>(l.gen)], l.exp));
    auto trivial = a.is_trivial(h);
    if (!trivial.has_value()) {
      ++inconclusive;
      continue;
    }
    if (*trivial) continue;
    if (!seen.insert(a.word_key(h)).second) continue;
    out.push_back(h);
  }
  return out;
}

}  // namespace

SpinningReport check_spinning(const VertexFamily& fam, const GroupAction& a,
                              const DistanceSystem& ds, const Rat& L, int word_bound) {
  if (a.degree() != ds.size()) throw InputError("action degree does not match distance system");
  SpinningReport rep;
  rep.L_required = L;
  rep.word_bound = word_bound;
  const int n = ds.size();

  rep.tree_form_checked = ds.is_indicator();
  rep.tree_form_pass = true;
  for (const auto& [v, gens] : fam.assignments) {
    if (gens.empty()) continue;
    auto elements = subgroup_elements(a, gens, word_bound, rep.inconclusive_words);
    for (const Word& h : elements) {
      int hv = a.apply(h, v);
      if (hv >= 0 && hv != v) {
        ++rep.violations;
        if (rep.witnesses.size() < 8)
          rep.witnesses.push_back(
              {"stabilizer", "h=" + a.str(h) + " moves its vertex " + std::to_string(v)});
        continue;
      }
      // Tree form: h must move every ambient edge at v.
      if (rep.tree_form_checked)
        for (int w = 0; w < n; ++w) {
          if (w == v || ds.ambient_distance(v, w) != 1) continue;
          int hw = a.apply(h, w);
          if (hw == w) {
            rep.tree_form_pass = false;
            ++rep.violations;
            if (rep.witnesses.size() < 8)
              rep.witnesses.push_back({"tree-spinning", "h=" + a.str(h) + " fixes the edge {" +
                                                            std::to_string(v) + "," +
                                                            std::to_string(w) + "}"});
          }
        }
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        int hw = a.apply(h, w);
        if (hw < 0) {
          ++rep.tuples_skipped;
          continue;
        }
        ++rep.tuples_checked;
        Rat d = ds.at(v, w, hw);
        if (!rep.measured_any || d < rep.L_measured) {
          rep.L_measured = d;
          rep.measured_any = true;
        }
        if (d < L) {
          ++rep.violations;
          if (rep.witnesses.size() < 8)
            rep.witnesses.push_back(
                {"spinning", "v=" + std::to_string(v) + " h=" + a.str(h) + " w=" +
                                 std::to_string(w) + " d_v(w,hw)=" + format_rat(d)});
        }
      }
    }
  }
  rep.pass = rep.violations == 0;
  return rep;
}

SymmetrizeResult symmetrize(const VertexFamily& fam, const GroupAction& a,
                            const std::vector<ComponentOrbit>& orbits) {
  SymmetrizeResult res;
  res.family = fam;
  res.closure_verified = true;
  const GroupSig& sig = a.word_sig();

  for (const auto& orbit : orbits) {
    if (orbit.components.empty() || orbit.components.size() != orbit.transporters.size())
      throw InputError("component orbit needs one transporter per component");
    if (!orbit.transporters.front().is_identity())
      throw InputError("first transporter must be the identity");
    const int x0 = orbit.components.front();
    for (std::size_t i = 0; i < orbit.components.size(); ++i) {
      int img = a.apply(orbit.transporters[i], x0);
      if (img != orbit.components[i])
        throw InputError("transporter " + std::to_string(i) + " does not map component " +
                         std::to_string(x0) + " to " + std::to_string(orbit.components[i]));
    }

    const std::size_t k = orbit.components.size();
    std::vector<std::vector<Word>> new_gens(k);
    for (std::size_t i = 0; i < k; ++i) {
      int xi = orbit.components[i];
      if (!fam.has(xi)) continue;
      for (std::size_t j = 0; j < k; ++j) {
        Word mover = word_mul(sig, orbit.transporters[j], word_inv(sig, orbit.transporters[i]));
        // The conjugator must permute the orbit's components.
        int where = a.apply(mover, xi);
        if (where != orbit.components[j]) res.closure_verified = false;
        for (const Word& f : fam.at(xi)) {
          ++res.generators_before;
          new_gens[j].push_back(word_conj(sig, mover, f));
        }
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::sort(new_gens[j].begin(), new_gens[j].end(), WordLess{});
      new_gens[j].erase(std::unique(new_gens[j].begin(), new_gens[j].end()), new_gens[j].end());
      res.family.assignments[orbit.components[j]] = new_gens[j];
      res.generators_after += static_cast<long long>(new_gens[j].size());
    }
  }
  return res;
}

}  // namespace windmill

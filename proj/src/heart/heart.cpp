#include <algorithm>

#include "ncproj/core/errors.hpp"
#include "ncproj/heart/heart.hpp"

namespace ncproj {

SheafClass::SheafClass(std::vector<Factor> factors) {
  for (const auto& f : factors) {
    if (f.multiplicity < 1) throw DomainError("factor " + f.charge.to_string() + " has multiplicity < 1");
  }
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.charge < b.charge; });
  for (auto& f : factors) {
    if (!factors_.empty() && factors_.back().charge == f.charge) {
      factors_.back().multiplicity += f.multiplicity;
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

Charge SheafClass::total() const {
  if (factors_.empty()) throw DomainError("the zero class has no charge");
  Integer r(0), d(0);
  for (const auto& f : factors_) {
    r += f.charge.rank * Integer(f.multiplicity);
    d += f.charge.deg * Integer(f.multiplicity);
  }
  return {r, d};
}

std::string SheafClass::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ", ";
    out += factors_[i].charge.to_string();
    if (factors_[i].multiplicity != 1) out += "*" + std::to_string(factors_[i].multiplicity);
  }
  return out + "]";
}

HNFiltration hn(const SheafClass& F) {
  if (F.empty()) throw DomainError("HN filtration of the zero class");
  std::vector<std::pair<Slope, const Factor*>> keyed;
  for (const auto& f : F.factors()) keyed.emplace_back(slope(f.charge), &f);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  HNFiltration out;
  std::vector<Factor> layer;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    layer.push_back(*keyed[i].second);
    if (i + 1 == keyed.size() || keyed[i + 1].first != keyed[i].first) {
      out.layers.push_back({keyed[i].first, SheafClass(std::move(layer))});
      layer.clear();
    }
  }
  return out;
}

TorsionSplit torsion_split(const SheafClass& F, const Theta& theta) {
  std::vector<Factor> t, q;
  for (const auto& f : F.factors()) (compare(slope(f.charge), theta) > 0 ? t : q).push_back(f);
  return {SheafClass(std::move(t)), SheafClass(std::move(q))};
}

bool in_heart(const HeartObject& K) {
  for (const auto& f : K.shifted.factors()) {
    if (compare(slope(f.charge), K.theta) > 0) return false;
  }
  for (const auto& f : K.plain.factors()) {
    if (compare(slope(f.charge), K.theta) <= 0) return false;
  }
  return true;
}

std::string to_string(HomVanishing v) { return v == HomVanishing::certain_zero ? "CERTAIN_ZERO" : "UNKNOWN"; }

HomVanishing hom_vanishes(const SheafClass& F, const SheafClass& G) {
  if (F.empty() || G.empty()) return HomVanishing::certain_zero;
  return hn(F).mu_min() > hn(G).mu_max() ? HomVanishing::certain_zero : HomVanishing::unknown;
}

}  // namespace ncproj

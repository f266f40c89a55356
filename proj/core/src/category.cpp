#include "tint/category.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tint/error.hpp"

namespace tint {

LatentCategory LatentCategory::build(std::vector<std::string> labels,
                                     std::span<const double> weights) {
  const std::size_t n = labels.size();
  if (weights.size() != n * n) {
    throw InputError("weight matrix has " + std::to_string(weights.size()) +
                     " entries, expected " + std::to_string(n) + "x" +
                     std::to_string(n));
  }

  LatentCategory latent;
  latent.images_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) {
      throw InputError("image " + std::to_string(i) + " has an empty label");
    }
    const auto id = static_cast<ImageId>(i);
    if (!latent.index_.emplace(labels[i], id).second) {
      throw InputError("duplicate image label '" + labels[i] + "'");
    }
    latent.images_.push_back(Image{id, std::move(labels[i])});
  }

  latent.weights_.assign(weights.begin(), weights.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double& w = latent.weights_[i * n + j];
      if (i == j) {
        w = 1.0;
        continue;
      }
      if (!(w >= 0.0 && w <= 1.0)) {
        throw InputError("weight of " + latent.images_[i].label + "->" +
                         latent.images_[j].label + " is " + std::to_string(w) +
                         ", outside [0,1]");
      }
    }
  }
  return latent;
}

LatentCategory LatentCategory::build(
    std::vector<std::string> labels,
    const std::vector<std::vector<double>>& weights) {
  const std::size_t n = labels.size();
  if (weights.size() != n) {
    throw InputError("weight matrix has " + std::to_string(weights.size()) +
                     " rows, expected " + std::to_string(n));
  }
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i].size() != n) {
      throw InputError("weight matrix row " + std::to_string(i) + " has " +
                       std::to_string(weights[i].size()) + " columns, expected " +
                       std::to_string(n));
    }
    flat.insert(flat.end(), weights[i].begin(), weights[i].end());
  }
  return build(std::move(labels), flat);
}

const std::string& LatentCategory::label(ImageId id) const {
  if (!contains(id)) throw InputError("unknown image id " + std::to_string(id));
  return images_[id].label;
}

std::optional<ImageId> LatentCategory::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ImageId LatentCategory::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw InputError("unknown image '" + std::string(label) + "'");
}

std::string_view to_string(ArrowOrigin origin) {
  switch (origin) {
    case ArrowOrigin::absent: return "absent";
    case ArrowOrigin::identity: return "identity";
    case ArrowOrigin::initial: return "initial";
    case ArrowOrigin::metaphor: return "metaphor";
    case ArrowOrigin::composite: return "composite";
    case ArrowOrigin::latent: return "latent";
  }
  return "?";
}

ElicitedCategory::ElicitedCategory(const LatentCategory& base)
    : base_(&base), origins_(base.size() * base.size(), ArrowOrigin::absent) {
  for (ImageId i = 0; i < base.size(); ++i) {
    origins_[static_cast<std::size_t>(i) * size() + i] = ArrowOrigin::identity;
  }
}

bool ElicitedCategory::elicit(Arrow a, ArrowOrigin origin) {
  if (!base_->contains(a.dom) || !base_->contains(a.cod)) {
    throw InputError("arrow " + std::to_string(a.dom) + "->" +
                     std::to_string(a.cod) + " refers to an unknown image");
  }
  auto& slot = origins_[static_cast<std::size_t>(a.dom) * size() + a.cod];
  if (slot != ArrowOrigin::absent) return false;
  slot = origin;
  return true;
}

std::vector<Arrow> ElicitedCategory::arrows() const {
  std::vector<Arrow> out;
  for (ImageId i = 0; i < size(); ++i) {
    auto from = arrows_from(i);
    out.insert(out.end(), from.begin(), from.end());
  }
  return out;
}

std::vector<Arrow> ElicitedCategory::arrows_from(ImageId dom) const {
  std::vector<Arrow> out;
  for (ImageId j = 0; j < size(); ++j) {
    if (j != dom && contains({dom, j})) out.push_back({dom, j});
  }
  return out;
}

std::size_t ElicitedCategory::arrow_count() const {
  const std::size_t all = static_cast<std::size_t>(
      std::count_if(origins_.begin(), origins_.end(),
                    [](ArrowOrigin o) { return o != ArrowOrigin::absent; }));
  return all - size();
}

void validate_setup(const LatentCategory& latent, const MetaphorSetup& setup) {
  auto check_image = [&](ImageId id, const char* role) {
    if (!latent.contains(id)) {
      throw InputError(std::string("unknown image id ") + std::to_string(id) +
                       " used as " + role);
    }
  };
  auto check_side = [&](ImageId root, const std::vector<ImageId>& initials,
                        const char* side) {
    check_image(root, side);
    std::vector<ImageId> seen;
    for (ImageId id : initials) {
      check_image(id, side);
      if (id == root) {
        throw InputError("root '" + latent.label(root) +
                         "' is listed among its own " + side + " initials");
      }
      if (std::find(seen.begin(), seen.end(), id) != seen.end()) {
        throw InputError("image '" + latent.label(id) + "' listed twice among " +
                         side + " initials");
      }
      seen.push_back(id);
    }
  };
  check_side(setup.source_root, setup.source_initials, "source");
  check_side(setup.target_root, setup.target_initials, "target");
  if (setup.source_root == setup.target_root) {
    throw InputError("source and target roots are the same image '" +
                     latent.label(setup.source_root) + "'");
  }
}

namespace {

void elicit_side(ElicitedCategory& elicited, ImageId root,
                 const std::vector<ImageId>& initials, Algorithm mode) {
  for (ImageId x : initials) elicited.elicit({root, x}, ArrowOrigin::initial);
  if (mode != Algorithm::relation_based) return;
  for (ImageId p : initials) {
    for (ImageId q : initials) {
      if (p != q) elicited.elicit({p, q}, ArrowOrigin::initial);
    }
  }
}

}  // namespace

ElicitedCategory elicit_initial(const LatentCategory& latent,
                                const MetaphorSetup& setup, Algorithm mode) {
  validate_setup(latent, setup);
  ElicitedCategory elicited(latent);
  elicit_side(elicited, setup.source_root, setup.source_initials, mode);
  elicit_side(elicited, setup.target_root, setup.target_initials, mode);
  return elicited;
}

void add_metaphor_arrow(ElicitedCategory& elicited, ImageId target_root,
                        ImageId source_root) {
  elicited.elicit({target_root, source_root}, ArrowOrigin::metaphor);
}

CosliceView coslice(const ElicitedCategory& elicited, ImageId root) {
  CosliceView view;
  view.root = root;
  view.objects = elicited.arrows_from(root);
  for (const Arrow& first : view.objects) {
    for (const Arrow& second : view.objects) {
      if (first.cod == second.cod) continue;
      const Arrow edge{first.cod, second.cod};
      if (elicited.contains(edge)) view.triangles.push_back({first, second, edge});
    }
  }
  return view;
}

void FunctorMap::assign(const Correspondence& c) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), c.source,
      [](const Correspondence& e, ImageId s) { return e.source < s; });
  if (it != entries_.end() && it->source == c.source) {
    throw Error("source image " + std::to_string(c.source) +
                " is already mapped");
  }
  entries_.insert(it, c);
}

const Correspondence* FunctorMap::find(ImageId source) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), source,
      [](const Correspondence& e, ImageId s) { return e.source < s; });
  if (it == entries_.end() || it->source != source) return nullptr;
  return &*it;
}

bool operator==(const FunctorMap& a, const FunctorMap& b) {
  if (a.source_root_ != b.source_root_ || a.target_root_ != b.target_root_ ||
      a.entries_.size() != b.entries_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.source != y.source || x.target != y.target || x.via != y.via ||
        x.witness_weight != y.witness_weight || x.distance != y.distance) {
      return false;
    }
  }
  return true;
}

FunctorMap bmf(ElicitedCategory& elicited, Arrow metaphor) {
  if (!elicited.contains(metaphor)) {
    throw Error("metaphor arrow " + elicited.base().label(metaphor.dom) + "->" +
                elicited.base().label(metaphor.cod) + " is not elicited");
  }
  const ImageId target_root = metaphor.dom;
  const ImageId source_root = metaphor.cod;
  const auto objects = elicited.arrows_from(source_root);
  if (objects.empty()) {
    throw Error("source coslice of '" + elicited.base().label(source_root) +
                "' is empty");
  }

  FunctorMap functor(source_root, target_root);
  for (const Arrow& b : objects) {
    elicited.elicit({target_root, b.cod}, ArrowOrigin::composite);
    functor.assign(Correspondence{b.cod, b.cod, 1.0,
                                  Correspondence::Via::composite, 0.0});
  }
  return functor;
}

std::string_view to_string(LawViolation::Kind kind) {
  switch (kind) {
    case LawViolation::Kind::missing_target_object: return "missing target object";
    case LawViolation::Kind::missing_witness: return "missing witness";
    case LawViolation::Kind::functoriality: return "functoriality";
    case LawViolation::Kind::naturality: return "naturality";
  }
  return "?";
}

std::size_t LawReport::count(LawViolation::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [kind](const LawViolation& v) { return v.kind == kind; }));
}

LawReport check_functor_laws(const FunctorMap& f,
                             const ElicitedCategory& elicited) {
  using Kind = LawViolation::Kind;
  LawReport report;

  for (const Correspondence& c : f.entries()) {
    ++report.objects_checked;
    const Arrow object{f.target_root(), c.target};
    if (!elicited.contains(object)) {
      report.violations.push_back({Kind::missing_target_object, object, {}});
    }
    if (!elicited.contains(c.witness())) {
      report.violations.push_back({Kind::missing_witness, c.witness(), {}});
    }
  }

  const CosliceView source = coslice(elicited, f.source_root());
  for (const Triangle& t : source.triangles) {
    const Correspondence* p = f.find(t.first.cod);
    const Correspondence* q = f.find(t.second.cod);
    if (p == nullptr || q == nullptr) continue;

    ++report.triangles_checked;
    const Arrow image_edge{p->target, q->target};
    if (!elicited.contains(image_edge)) {
      report.violations.push_back({Kind::functoriality, image_edge, t.edge});
    }

    ++report.squares_checked;
    // theta_q o BMF(g) = F(g) o theta_p: in a thin category the square
    // commutes iff its four sides exist. BMF(g) = g exists by construction.
    for (const Arrow side : {p->witness(), q->witness(), image_edge}) {
      if (!elicited.contains(side)) {
        report.violations.push_back({Kind::naturality, side, t.edge});
        break;
      }
    }
  }
  return report;
}

}  // namespace tint

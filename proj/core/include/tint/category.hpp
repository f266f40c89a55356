#pragma once
// Finite thin categories over images.
//
// A LatentCategory is a weighted complete directed graph: every ordered pair
// of images has an associative probability in [0,1], identities weigh 1.
// An ElicitedCategory is the unweighted thin category of arrows that have
// actually fired during one comprehension episode. Thinness is structural:
// an arrow is identified by its (dom, cod) pair.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tint {

using ImageId = std::uint32_t;

struct Image {
  ImageId id = 0;
  std::string label;
};

struct Arrow {
  ImageId dom = 0;
  ImageId cod = 0;

  bool is_identity() const { return dom == cod; }
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

enum class Algorithm { object_based, relation_based };

class LatentCategory {
 public:
  // `weights` is row-major n*n; weights[i*n + j] is the weight of i->j.
  // The diagonal is overwritten with 1.0 whatever the input says.
  static LatentCategory build(std::vector<std::string> labels,
                              std::span<const double> weights);
  static LatentCategory build(std::vector<std::string> labels,
                              const std::vector<std::vector<double>>& weights);

  std::size_t size() const { return images_.size(); }
  const std::vector<Image>& images() const { return images_; }
  const std::string& label(ImageId id) const;
  bool contains(ImageId id) const { return id < images_.size(); }

  double weight(ImageId from, ImageId to) const {
    return weights_[static_cast<std::size_t>(from) * size() + to];
  }
  double weight(Arrow a) const { return weight(a.dom, a.cod); }

  std::optional<ImageId> find(std::string_view label) const;
  // Throws InputError naming the label when it is not an image.
  ImageId id_of(std::string_view label) const;

 private:
  LatentCategory() = default;

  std::vector<Image> images_;
  std::vector<double> weights_;
  std::unordered_map<std::string, ImageId> index_;
};

// Why an arrow is present in an elicited category.
enum class ArrowOrigin : std::uint8_t {
  absent = 0,
  identity,
  initial,    // root->initial and inter-initial arrows set up before search
  metaphor,   // A->B added by presenting "A is B"
  composite,  // b_i o f created by the base-of-metaphor functor
  latent,     // fired by a Bernoulli draw on its latent weight
};

std::string_view to_string(ArrowOrigin origin);

class ElicitedCategory {
 public:
  explicit ElicitedCategory(const LatentCategory& base);

  const LatentCategory& base() const { return *base_; }
  std::size_t size() const { return base_->size(); }

  bool contains(Arrow a) const { return origin(a) != ArrowOrigin::absent; }
  ArrowOrigin origin(Arrow a) const {
    return origins_[static_cast<std::size_t>(a.dom) * size() + a.cod];
  }

  // Returns true when the arrow was not present before. An arrow that is
  // already present keeps its original origin.
  bool elicit(Arrow a, ArrowOrigin origin);

  // Non-identity arrows, ordered by (dom, cod).
  std::vector<Arrow> arrows() const;
  std::vector<Arrow> arrows_from(ImageId dom) const;
  std::size_t arrow_count() const;

 private:
  const LatentCategory* base_;
  std::vector<ArrowOrigin> origins_;
};

// Roots and initial images of a metaphor "target is source" (A is B).
struct MetaphorSetup {
  ImageId source_root = 0;
  ImageId target_root = 0;
  std::vector<ImageId> source_initials;
  std::vector<ImageId> target_initials;

  Arrow metaphor_arrow() const { return {target_root, source_root}; }
};

// Throws InputError on unknown images, a root listed among its own
// initials, or a repeated initial.
void validate_setup(const LatentCategory& latent, const MetaphorSetup& setup);

// Initial state of both coslices: root->initial arrows on each side, plus,
// for the relation-based algorithm, every ordered pair among the initials of
// each side.
ElicitedCategory elicit_initial(const LatentCategory& latent,
                                const MetaphorSetup& setup, Algorithm mode);

// Elicits target_root -> source_root regardless of its latent weight.
void add_metaphor_arrow(ElicitedCategory& elicited, ImageId target_root,
                        ImageId source_root);

// first: root->X_i, second: root->X_j, edge: X_i->X_j. In a thin category the
// triangle commutes as soon as all three arrows exist.
struct Triangle {
  Arrow first;
  Arrow second;
  Arrow edge;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct CosliceView {
  ImageId root = 0;
  std::vector<Arrow> objects;  // non-identity arrows out of root
  std::vector<Triangle> triangles;
};

CosliceView coslice(const ElicitedCategory& elicited, ImageId root);

// One component of a natural transformation: the source coslice object
// b: B->source is sent to the target coslice object a: A->target, witnessed
// by the arrow source->target.
struct Correspondence {
  enum class Via { composite, object, triangle };

  ImageId source = 0;
  ImageId target = 0;
  double witness_weight = 0.0;
  Via via = Via::object;
  double distance = 0.0;  // triangle distance, only meaningful for Via::triangle

  Arrow witness() const { return {source, target}; }
};

// A partial functor between coslices, stored by its object map. Each source
// image maps to at most one target image.
class FunctorMap {
 public:
  FunctorMap() = default;
  FunctorMap(ImageId source_root, ImageId target_root)
      : source_root_(source_root), target_root_(target_root) {}

  ImageId source_root() const { return source_root_; }
  ImageId target_root() const { return target_root_; }

  // Throws tint::Error if c.source is already mapped.
  void assign(const Correspondence& c);
  const Correspondence* find(ImageId source) const;

  // Ordered by source image id.
  std::span<const Correspondence> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const FunctorMap& a, const FunctorMap& b);

 private:
  ImageId source_root_ = 0;
  ImageId target_root_ = 0;
  std::vector<Correspondence> entries_;
};

// Base-of-metaphor functor: b_i |-> b_i o f. Elicits every composite A->B_i
// (tagged ArrowOrigin::composite) and returns the total functor whose
// components are the identities on each B_i. Throws if f is not elicited or
// the source coslice is empty.
FunctorMap bmf(ElicitedCategory& elicited, Arrow metaphor);

struct LawViolation {
  enum class Kind {
    missing_target_object,  // A->F(b) not elicited
    missing_witness,        // component B_i->A_j not elicited
    functoriality,          // image of a source triangle is not a triangle
    naturality,             // naturality square has a missing side
  };

  Kind kind;
  Arrow missing;            // the arrow whose absence breaks the law
  std::optional<Arrow> edge;  // source triangle edge B_p->B_q, when relevant
};

std::string_view to_string(LawViolation::Kind kind);

struct LawReport {
  std::size_t objects_checked = 0;
  std::size_t triangles_checked = 0;
  std::size_t squares_checked = 0;
  std::vector<LawViolation> violations;

  bool lawful() const { return violations.empty(); }
  std::size_t count(LawViolation::Kind kind) const;
};

// Advisory check of functoriality and naturality of `f` against BMF.
LawReport check_functor_laws(const FunctorMap& f,
                             const ElicitedCategory& elicited);

}  // namespace tint

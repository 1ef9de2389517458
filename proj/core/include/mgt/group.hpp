// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MGT_GROUP_HPP
#define MGT_GROUP_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgt/matrix.hpp"

namespace mgt {

// Finitely generated matrix group with labeled generators. The symmetric
// generating set S = {g, g^-1} is derived automatically; inverses are checked
// at construction.
class MatrixGroup {
 public:
  struct Generator {
    std::string label;
    SquareMatrix m;
    SquareMatrix m_inv;
  };

  static MatrixGroup from_generators(std::vector<std::pair<std::string, SquareMatrix>> labeled);

  const FieldDescriptor& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }
  int index_of(const std::string& label) const;  // throws if unknown

  // Letters are signed 1-based generator indices: +i is generator i-1,
  // -i its inverse.
  const SquareMatrix& letter(int signed_index) const;
  std::string letter_name(int signed_index) const;

 private:
  FieldDescriptor field_;
  int dim_ = 0;
  std::vector<Generator> gens_;
};

// Word in the symmetric generating set.
struct Word {
  std::vector<int> letters;

  static Word empty() { return {}; }
  std::size_t length() const { return letters.size(); }
  Word inverse() const;
  Word concat(const Word&) const;
  std::string to_string(const MatrixGroup&) const;  // e.g. "t a t^-1"
};

SquareMatrix evaluate_word(const MatrixGroup&, const Word&);

// Radius-r word-metric index keyed by canonical matrix form. Every element at
// distance <= completed_radius appears exactly once with its true minimal
// word length and a witness word of that length.
class CayleyBall {
 public:
  struct Entry {
    SquareMatrix m;
    int length;
    Word witness;
  };

  const MatrixGroup& group() const { return *group_; }
  int requested_radius() const { return requested_radius_; }
  int completed_radius() const { return completed_radius_; }
  bool complete() const { return completed_radius_ == requested_radius_; }
  bool budget_exceeded() const { return budget_exceeded_; }
  // The group was exhausted before the radius: the ball is the whole group.
  bool saturated() const { return saturated_; }

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& elements() const { return entries_; }
  const Entry* find(const SquareMatrix&) const;

  friend CayleyBall bfs_ball(const MatrixGroup&, int, std::size_t, const std::vector<int>*);

 private:
  const MatrixGroup* group_ = nullptr;
  int requested_radius_ = 0;
  int completed_radius_ = 0;
  bool budget_exceeded_ = false;
  bool saturated_ = false;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Breadth-first ball construction. Deterministic: the element -> length map
// is independent of the expansion order (which can be overridden to check
// exactly that). A partial result keeps only fully completed layers and is
// flagged budget_exceeded.
CayleyBall bfs_ball(const MatrixGroup&, int radius, std::size_t element_budget = 1000000,
                    const std::vector<int>* expansion_order = nullptr);

struct LengthQuery {
  std::optional<int> exact;
  int lower_bound_radius = 0;  // exact-less results mean length > this
};

LengthQuery word_length(const CayleyBall&, const SquareMatrix&);

// Exponent-indexed table for a commuting subgroup basis.
struct DistortionProfile {
  enum class Status { Exact, LowerBound, UpperBound };
  struct Row {
    std::vector<long> exponents;
    long l1 = 0;
    Status status = Status::LowerBound;
    long value = 0;  // exact length, verified upper bound, or the radius bound
  };
  std::vector<std::string> basis_labels;
  int ball_radius = 0;
  std::vector<Row> rows;

  // max over rows with known length of l1 / length (1.0 means undistorted so far)
  double max_ratio = 0.0;
  std::string to_csv() const;
};

// Upper bounds from verified identity words: given an exponent vector,
// returns a word that evaluates to the corresponding subgroup element.
using IdentityWordSupplier =
    std::function<std::optional<Word>(const std::vector<long>& exponents)>;

DistortionProfile distortion_profile(const MatrixGroup&, const std::vector<std::string>& basis_labels,
                                     long exponent_range, const CayleyBall&,
                                     const IdentityWordSupplier& upper_bounds = nullptr);

struct TranslationLengthEstimate {
  struct Sample {
    long n;
    long length;
  };
  std::vector<Sample> samples;  // all n <= n_max with g^n in the ball
  int ball_radius = 0;
  std::string caveat;
};

TranslationLengthEstimate translation_length_estimate(const MatrixGroup&, const SquareMatrix& g,
                                                      const CayleyBall&, long n_max = 64);

// NIU audit at ball scale.
struct UnipotentAuditReport {
  enum class Verdict {
    ViolationWitnessed,    // infinite-order unipotent found
    NoViolationInBall,     // unipotents found, all of finite order
    VacuouslyConsistent    // no nontrivial unipotent in the ball
  };
  struct Witness {
    SquareMatrix m;
    Word word;
    std::string order;  // decimal, or "infinite"
  };
  Verdict verdict = Verdict::VacuouslyConsistent;
  std::vector<Witness> witnesses;
  int radius = 0;
  bool exhaustive = false;  // ball saturated: the audit covered the whole group
  std::string note;
};

UnipotentAuditReport audit_unipotents(const MatrixGroup&, const CayleyBall&, long order_bound);

// Block-diagonal direct product; both factors must live over the same field.
MatrixGroup direct_product(const MatrixGroup&, const MatrixGroup&);

}  // namespace mgt

#endif  // MGT_GROUP_HPP

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlie/lifted.hpp"

namespace qlie {

enum class AppendixScope { Udu, CaseFamilies, RandomSurvey };

std::string scope_name(AppendixScope s);
/// "udu", "case_families", "random_survey"; throws Parse otherwise.
AppendixScope parse_scope(const std::string& s);

struct AppendixOptions {
  std::uint64_t seed = 20160101;
  std::size_t trials = 100;
  std::size_t samples = 20000;
};

/// U D U = tr(D) U for the all-ones 4x4 U and random diagonal D.
struct UduReport {
  std::size_t trials = 0, passed = 0;
  bool ok() const { return trials > 0 && passed == trials; }
};

/// One eliminated branch: how many braidings survived the filters, how many
/// beta points were examined and how many full solutions were found.
struct FamilyReport {
  std::string name;
  std::size_t braidings = 0, betas = 0, solutions = 0;
};

struct SurveyReport {
  std::size_t samples = 0, braided = 0, hypothesis = 0;
  /// Verified lifted QLie algebras with beta != 0, split by dim Im beta.
  std::size_t lifted = 0, im_beta_1 = 0, im_beta_2 = 0;
  /// dim Im beta = 1 instances that canonical_form placed on a table row.
  std::size_t classified = 0;
  /// dim Im beta = 2 instances with dim Im(c + Id) = 2, resp. with the ker beta splitting.
  std::size_t im_c_plus_id_2 = 0, ker_split = 0;
  bool ok() const { return classified == im_beta_1 && im_c_plus_id_2 == im_beta_2 && ker_split == im_beta_2; }
};

struct AppendixReport {
  Field field = Field::rationals();
  AppendixScope scope = AppendixScope::Udu;
  std::optional<UduReport> udu;
  std::vector<FamilyReport> families;
  std::optional<SurveyReport> survey;
  bool ok() const;
};

/// Case families and the survey need GF(p) (UnsupportedField otherwise); all scopes need char != 2.
AppendixReport appendix_checks(Field f, AppendixScope scope, const AppendixOptions& opt = {});

/// ker beta = Im(c + Id) (+) (ker beta cap Im h(c)), as a direct sum.
bool ker_beta_splits(const LiftedQLie& q);

}  // namespace qlie

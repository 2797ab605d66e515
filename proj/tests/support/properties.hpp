#pragma once

// Randomized and exhaustive property checks, shared by the unit tests and the
// acceptance runner. Each check returns a report; a passing report has
// exercised at least one case and seen no counterexample.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases_;
    if (ok) return;
    ++failed_;
    if (samples_.size() < 5) samples_.push_back(describe());
  }

  const std::string& name() const noexcept { return name_; }
  std::uint64_t cases() const noexcept { return cases_; }
  std::uint64_t failed() const noexcept { return failed_; }
  bool ok() const noexcept { return failed_ == 0 && cases_ > 0; }
  std::string summary() const;

 private:
  std::string name_;
  std::uint64_t cases_ = 0;
  std::uint64_t failed_ = 0;
  std::vector<std::string> samples_;
};

// groupcore
Report xi_lcm_identity();
Report perm_group_laws();
Report rotation_addition();
Report scaling_homomorphism();

// numtheory
Report log_base_change();
Report fermat_little();
Report root_half_order();
Report factorization_round_trip();
Report valuation_product();
Report discrete_log_matches_search();
Report order_is_minimal();

// seqcore
Report similarity_equivalence();
Report composite_progression_closure();
Report shift_similarity_forces_period();
Report periodic_subsequences_are_periodic();
Report period_detection_matches_search();

// additive
Report generator_sum_is_pointwise_sum();
Report pgs_matches_trial_division();
Report additive_words_are_not_periodic();
Report diagonal_scan_matches_closed_form();
Report scale_invariance();
Report additivity_check_matches_search();

// toeplitz
Report composition_monoid_random();
Report composition_monoid_exhaustive();
Report composition_size_formulas();
Report power_matches_generations();
Report fill_fixed_point();
Report word_matches_generations();
Report hanoi_mod_two();
Report morphism_round_trip();
Report repetition_and_power_equivalence();

// toeplitzadd
Report constructed_patterns_are_additive();
Report classification_matches_prefix_check();
Report atoms_are_scaled_logarithms();
Report composite_length_members_are_zero();
Report logarithm_word_base_change();
Report generator_reproduces_word();

// arithperm
Report coprime_permutation_reads_progression();
Report coprime_permutation_structure();
Report subseq_pattern_random();
Report raised_pattern_dividing_step();
Report order_cofactor_identity();
Report gap_to_end_round_trip();
Report commuting_conjugation();

// keane
Report keane_monoid();
Report keane_block_recurrence();
Report digit_formula_matches_iteration();
Report delta_embedding_homomorphism();
Report difference_is_toeplitz();
Report keane_words_are_not_additive();
Report keane_power_progressions();
Report mephisto_difference();
Report thue_morse_tools();

// cli
Report spec_round_trip();

struct Entry {
  const char* module;
  Report (*run)();
};

/// Every property above, grouped by module.
const std::vector<Entry>& all();

}  // namespace props

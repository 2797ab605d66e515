#include "properties.hpp"

namespace props {

std::string Report::summary() const {
  std::string s = name_ + ": " + std::to_string(cases_) + " cases, " + std::to_string(failed_) + " failed";
  for (const auto& m : samples_) s += "\n  " + m;
  return s;
}

const std::vector<Entry>& all() {
  static const std::vector<Entry> entries = {
      {"groupcore", xi_lcm_identity},
      {"groupcore", perm_group_laws},
      {"groupcore", rotation_addition},
      {"groupcore", scaling_homomorphism},
      {"numtheory", log_base_change},
      {"numtheory", fermat_little},
      {"numtheory", root_half_order},
      {"numtheory", factorization_round_trip},
      {"numtheory", valuation_product},
      {"numtheory", discrete_log_matches_search},
      {"numtheory", order_is_minimal},
      {"seqcore", similarity_equivalence},
      {"seqcore", composite_progression_closure},
      {"seqcore", shift_similarity_forces_period},
      {"seqcore", periodic_subsequences_are_periodic},
      {"seqcore", period_detection_matches_search},
      {"additive", generator_sum_is_pointwise_sum},
      {"additive", pgs_matches_trial_division},
      {"additive", additive_words_are_not_periodic},
      {"additive", diagonal_scan_matches_closed_form},
      {"additive", scale_invariance},
      {"additive", additivity_check_matches_search},
      {"toeplitz", composition_monoid_random},
      {"toeplitz", composition_monoid_exhaustive},
      {"toeplitz", composition_size_formulas},
      {"toeplitz", power_matches_generations},
      {"toeplitz", fill_fixed_point},
      {"toeplitz", word_matches_generations},
      {"toeplitz", hanoi_mod_two},
      {"toeplitz", morphism_round_trip},
      {"toeplitz", repetition_and_power_equivalence},
      {"toeplitzadd", constructed_patterns_are_additive},
      {"toeplitzadd", classification_matches_prefix_check},
      {"toeplitzadd", atoms_are_scaled_logarithms},
      {"toeplitzadd", composite_length_members_are_zero},
      {"toeplitzadd", logarithm_word_base_change},
      {"toeplitzadd", generator_reproduces_word},
      {"arithperm", coprime_permutation_reads_progression},
      {"arithperm", coprime_permutation_structure},
      {"arithperm", subseq_pattern_random},
      {"arithperm", raised_pattern_dividing_step},
      {"arithperm", order_cofactor_identity},
      {"arithperm", gap_to_end_round_trip},
      {"arithperm", commuting_conjugation},
      {"keane", keane_monoid},
      {"keane", keane_block_recurrence},
      {"keane", digit_formula_matches_iteration},
      {"keane", delta_embedding_homomorphism},
      {"keane", difference_is_toeplitz},
      {"keane", keane_words_are_not_additive},
      {"keane", keane_power_progressions},
      {"keane", mephisto_difference},
      {"keane", thue_morse_tools},
      {"cli", spec_round_trip},
  };
  return entries;
}

}  // namespace props

#pragma once

#include <string>
#include <string_view>

namespace covtop {

enum class Answer { yes, no, unknown };

enum class UnknownReason { none, budget, incomplete_universe };

/**
 * Three-valued answer to a question that hides a word problem. YES and NO
 * always carry the certificate that produced them; UNKNOWN says why it gave up.
 */
struct Verdict {
  Answer answer = Answer::unknown;
  UnknownReason reason = UnknownReason::budget;
  std::string certificate;

  static Verdict yes(std::string certificate) { return {Answer::yes, UnknownReason::none, std::move(certificate)}; }
  static Verdict no(std::string certificate) { return {Answer::no, UnknownReason::none, std::move(certificate)}; }
  static Verdict unknown(UnknownReason why, std::string note = {}) {
    return {Answer::unknown, why, std::move(note)};
  }

  bool is_yes() const { return answer == Answer::yes; }
  bool is_no() const { return answer == Answer::no; }
  bool is_unknown() const { return answer == Answer::unknown; }
};

/// YES∧YES = YES; any NO = NO; otherwise UNKNOWN. Independent of argument order.
Verdict conjunction(const Verdict& a, const Verdict& b);

std::string_view to_string(Answer a);
std::string_view to_string(UnknownReason r);
std::string describe(const Verdict& v);

}  // namespace covtop

#pragma once

#include "ggr/critical.hpp"
#include "ggr/expand.hpp"
#include "ggr/rational.hpp"
#include "ggr/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ggr {

// One output row: ordered key/value pairs, values already rendered as text.
// Every row of a listing must carry the same keys in the same order.
struct OutputRecord {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  // Value for key, or nullptr when absent.
  const std::string* find(const std::string& key) const;

  bool operator==(const OutputRecord&) const = default;
};

enum class OutputFormat { Csv, Json };

// CSV: header row from the first record's keys, LF line endings, fields
// quoted per RFC 4180 only when they contain a comma, quote, or newline.
// Throws std::invalid_argument if the records disagree on keys.
std::string render_csv(const std::vector<OutputRecord>& rows);
std::vector<OutputRecord> parse_csv(const std::string& text);

// JSON: array of one object per record, keys in insertion order, every
// value a JSON string (so renderings round-trip byte-exactly and CSV and
// JSON carry identical values).
std::string render_json(const std::vector<OutputRecord>& rows);
std::vector<OutputRecord> parse_json(const std::string& text);

std::string render(const std::vector<OutputRecord>& rows, OutputFormat f);

// Rendering knobs shared by the projections below.
struct RenderOptions {
  int digits = 12;  // digits after the decimal point for inexact values
};

// Exact rational as text: integer when integral, terminating decimal when
// the denominator is 2^a 5^b, fraction "n/d" otherwise.
std::string exact_rational_string(const Rational& x);

// Approximate value at the configured precision; enclosures print their
// midpoint.
std::string approx_string(const BoundedReal& x, const RenderOptions& opt);

// h-parameter list of a sequence: "(2,2)" finite, "()" for 0^inf,
// "(3,1^inf)" for a ones tail, "(1,1,...)" for a depth-limited prefix.
std::string h_string(const AdmissibleSeq& d);

// Period of the sequence's word as concatenated binary digits, preceded by
// the preperiod in "pre(per)" form when nonempty; "" when the word was too
// long to materialize.
std::string d_period_string(const AdmissibleSeq& d);

std::string tristate_string(Tristate t);

// Fixed projection m,N,h,d_period,p_prime,p_double_prime,p,P,in_C shared by
// the table and curve listings.
OutputRecord table_row(const CriticalResult& r, const RenderOptions& opt);

// Full single-query record: the table columns plus status, exact symbolic
// forms of the four bases (empty when not exact), and the m-bracket of a
// depth-limited search.
OutputRecord critical_record(const CriticalResult& r, const RenderOptions& opt);

// One row per uniqueness condition (kind, 1-based position, digit, root,
// exact root) followed by a summary row with kind "critical" and the
// critical base itself.
std::vector<OutputRecord> qc_records(const CriticalBase& cb, const RenderOptions& opt);

OutputRecord unique_record(const Rational& q, const ExpansionReport& rep,
                           const RenderOptions& opt);

OutputRecord interval_record(const AdmissibleSeq& d, const ComponentData& cd,
                             const RenderOptions& opt);

// One row per expansion prefix (1-based index, comma-separated digits); the
// overflow flag of the enumeration is repeated on every row.
std::vector<OutputRecord> expansion_records(const EnumerationResult& er,
                                            const RenderOptions& opt);

OutputRecord cantor_record(const Rational& m, Tristate t, const RenderOptions& opt);

}  // namespace ggr

#pragma once

#include <json.hpp>

#include <ostream>
#include <span>

#include "theta_sums/campaign.hpp"

namespace theta_sums {

enum class ReportFormat { Csv, JsonLines };

// Field names and order match the CSV headers.
nlohmann::ordered_json to_json(const ConjectureRow& r);
nlohmann::ordered_json to_json(const Theorem1Row& r);
nlohmann::ordered_json to_json(const WitnessRow& r);
// Deterministic fields only; elapsed time is left out.
nlohmann::ordered_json to_json(const SweepSummary& s);

// CSV with a mandatory header row, LF line endings.
void write_csv(std::ostream& os, std::span<const ConjectureRow> rows);
void write_csv(std::ostream& os, std::span<const Theorem1Row> rows);
void write_csv(std::ostream& os, std::span<const WitnessRow> rows);

// One object per row, then {"summary": {...}}.
void write_jsonl(std::ostream& os, std::span<const ConjectureRow> rows,
                 const SweepSummary& summary);
void write_jsonl(std::ostream& os, std::span<const Theorem1Row> rows,
                 const SweepSummary& summary);
void write_jsonl(std::ostream& os, std::span<const WitnessRow> rows,
                 const SweepSummary& summary);

template <typename Row>
void write_report(std::ostream& os, const SweepResult<Row>& result,
                  ReportFormat format) {
  if (format == ReportFormat::Csv) {
    write_csv(os, std::span<const Row>(result.rows));
  } else {
    write_jsonl(os, std::span<const Row>(result.rows), result.summary);
  }
}

}  // namespace theta_sums

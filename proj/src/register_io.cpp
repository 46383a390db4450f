#include <istream>
#include <json.hpp>
#include <ostream>
#include <string>

#include "ppc/errors.hpp"
#include "ppc/solver.hpp"

namespace ppc {

using nlohmann::json;

void write_register_jsonl(const ProblemInstance& instance, const RunRegister& reg, std::ostream& out) {
  for (std::size_t i = 0; i < reg.entries.size(); ++i) {
    const auto& e = reg.entries[i];
    out << "{\"step\": " << i + 1 << ", \"var\": " << instance.label(e.var) << ", \"tapeValue\": " << e.value;
    if (e.record)
      out << ", \"alpha\": " << e.record->alpha << ", \"beta\": " << e.record->beta
          << ", \"gamma\": " << e.record->gamma << ", \"event\": " << e.record->event;
    out << "}\n";
  }
}

RunRegister read_register_jsonl(const ProblemInstance& instance, std::istream& in) {
  RunRegister reg;
  reg.tapes.assign(instance.num_vars(), {});
  std::string line;
  std::size_t lineno = 0;
  auto field = [&](const json& rec, const char* key) -> std::uint64_t {
    if (!rec.contains(key) || !rec[key].is_number_unsigned())
      throw ParseError("register line " + std::to_string(lineno) + ": missing or invalid \"" + key + "\"");
    return rec[key].get<std::uint64_t>();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError("register line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!rec.is_object()) throw ParseError("register line " + std::to_string(lineno) + ": not an object");
    if (field(rec, "step") != reg.entries.size() + 1)
      throw ParseError("register line " + std::to_string(lineno) + ": steps must be consecutive from 1");
    const auto label = field(rec, "var");
    const VarId var = instance.var_of_label(static_cast<std::uint32_t>(label));
    if (label > UINT32_MAX || var >= instance.num_vars())
      throw ParseError("register line " + std::to_string(lineno) + ": unknown variable " + std::to_string(label));
    const auto value = field(rec, "tapeValue");
    if (value < 1 || value > instance.domain(var))
      throw ParseError("register line " + std::to_string(lineno) + ": tape value out of domain");
    RegisterEntry entry{var, static_cast<Color>(value), std::nullopt};
    if (rec.contains("alpha") || rec.contains("beta") || rec.contains("gamma")) {
      RegisterRecord r;
      r.alpha = static_cast<std::uint32_t>(field(rec, "alpha"));
      r.beta = static_cast<std::uint32_t>(field(rec, "beta"));
      r.gamma = field(rec, "gamma");
      r.event = rec.contains("event") ? static_cast<std::uint32_t>(field(rec, "event")) : 0;
      entry.record = r;
    }
    reg.tapes[var].push_back(entry.value);
    reg.entries.push_back(entry);
  }
  return reg;
}

}  // namespace ppc

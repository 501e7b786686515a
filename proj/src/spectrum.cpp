#include "sgspectra/spectrum.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace spectra {

std::int64_t Spectrum::total() const {
  std::int64_t t = 0;
  if (exact)
    for (const auto& [v, m] : exact_pairs) t += m;
  else
    for (const auto& [v, m] : numeric_pairs) t += m;
  return t;
}

std::int64_t Spectrum::multiplicity_of(std::int64_t value) const {
  for (const auto& [v, m] : exact_pairs)
    if (v == value) return m;
  return 0;
}

Spectrum Spectrum::from_exact(
    const std::map<std::int64_t, std::int64_t>& m) {
  Spectrum s;
  s.exact = true;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    if (it->second > 0) s.exact_pairs.emplace_back(it->first, it->second);
  return s;
}

Spectrum Spectrum::from_numeric(
    std::vector<std::pair<double, std::int64_t>> pairs) {
  Spectrum s;
  s.numeric_pairs = std::move(pairs);
  std::sort(s.numeric_pairs.begin(), s.numeric_pairs.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return s;
}

std::string Spectrum::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  if (exact) {
    for (const auto& [v, m] : exact_pairs) {
      if (!first) out << ", ";
      out << v << ':' << m;
      first = false;
    }
  } else {
    for (const auto& [v, m] : numeric_pairs) {
      if (!first) out << ", ";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", v);
      out << buf << ':' << m;
      first = false;
    }
  }
  out << '}';
  return out.str();
}

bool operator==(const Spectrum& a, const Spectrum& b) {
  return a.exact == b.exact && a.exact_pairs == b.exact_pairs &&
         a.numeric_pairs == b.numeric_pairs;
}

std::string spectrum_to_json(const Spectrum& s, int n,
                             const std::string& genset_label) {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["genset"] = genset_label;
  doc["exact"] = s.exact;
  auto& list = doc["spectrum"] = nlohmann::ordered_json::array();
  if (s.exact) {
    for (const auto& [v, m] : s.exact_pairs)
      list.push_back({{"value", v}, {"multiplicity", m}});
  } else {
    for (const auto& [v, m] : s.numeric_pairs) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.10f", v);
      list.push_back({{"value", std::string(buf)}, {"multiplicity", m}});
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace spectra

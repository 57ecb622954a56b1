#include "orbitdim/state_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <json.hpp>
#include <set>
#include <sstream>
#include <vector>

namespace orbitdim {

namespace {

using nlohmann::json;

std::string located(const std::string& message, int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " + message : message;
}

// Line numbers of every JSON object in opening order, with duplicate keys
// rejected on the way. nlohmann keeps the last of two equal keys silently.
std::vector<int> scan_objects(std::string_view text) {
  std::vector<int> object_lines;
  std::vector<std::set<std::string>> keys;  // one per open container
  std::vector<bool> is_object;
  int line = 1;
  bool expect_key = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
    } else if (c == '{') {
      object_lines.push_back(line);
      is_object.push_back(true);
      keys.emplace_back();
      expect_key = true;
    } else if (c == '[') {
      is_object.push_back(false);
      keys.emplace_back();
      expect_key = false;
    } else if (c == '}' || c == ']') {
      if (!is_object.empty()) {
        is_object.pop_back();
        keys.pop_back();
      }
      expect_key = false;
    } else if (c == ',') {
      expect_key = !is_object.empty() && is_object.back();
    } else if (c == '"') {
      std::string s;
      std::size_t j = i + 1;
      for (; j < text.size() && text[j] != '"'; ++j) {
        if (text[j] == '\\' && j + 1 < text.size()) s += text[j++];
        s += text[j];
      }
      if (expect_key && !keys.empty() && !keys.back().insert(s).second) {
        throw StateFileError(located("duplicate key \"" + s + "\"", line), line);
      }
      expect_key = false;
      i = j;
    }
  }
  return object_lines;
}

int line_of(std::string_view text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) line += text[i] == '\n';
  return line;
}

struct Context {
  std::vector<int> lines;  // object line numbers in opening order
  std::size_t next = 1;    // index 0 is the root object

  int take() { return next < lines.size() ? lines[next++] : 0; }
};

[[noreturn]] void fail(const std::string& message, int line) {
  throw StateFileError(located(message, line), line);
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed, int line) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail("unknown key \"" + key + "\"", line);
  }
  for (const char* a : allowed) {
    if (!obj.contains(a)) fail(std::string("missing key \"") + a + "\"", line);
  }
}

Occupation read_occupation(const json& value, std::size_t modes, const char* what, int line) {
  if (!value.is_array()) fail(std::string(what) + " must be a list of integers", line);
  if (value.size() != modes) {
    fail(std::string(what) + " has " + std::to_string(value.size()) + " entries, expected " +
             std::to_string(modes),
         line);
  }
  std::vector<int> counts;
  for (const auto& v : value) {
    if (!v.is_number_integer()) fail(std::string(what) + " must be a list of integers", line);
    const auto n = v.get<long long>();
    if (n < 0) fail(std::string(what) + " has a negative occupation", line);
    if (n > 1000000) fail(std::string(what) + " has an occupation that is too large", line);
    counts.push_back(int(n));
  }
  return Occupation(counts);
}

Complex read_amplitude(const json& obj, int line) {
  for (const char* key : {"re", "im"}) {
    if (!obj[key].is_number()) fail(std::string("\"") + key + "\" must be a number", line);
  }
  const Complex a(obj["re"].get<double>(), obj["im"].get<double>());
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) fail("amplitude is not finite", line);
  return a;
}

std::string occ_json(const Occupation& n) {
  const auto c = n.counts();
  return json(std::vector<int>(c.begin(), c.end())).dump();
}

std::string number(double x) { return json(x).dump(); }

}  // namespace

StateFileError::StateFileError(const std::string& message, int line)
    : std::runtime_error(message), line_(line) {}

StateFile parse_state(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const int line = line_of(text, e.byte > 0 ? e.byte - 1 : 0);
    fail(std::string("malformed JSON: ") + e.what(), line);
  }
  Context ctx{scan_objects(text)};
  if (!root.is_object()) fail("state file must be a JSON object", 1);
  const int root_line = ctx.lines.empty() ? 1 : ctx.lines.front();
  if (!root.contains("kind") || !root["kind"].is_string()) fail("missing string key \"kind\"", root_line);
  const std::string kind = root["kind"].get<std::string>();
  if (kind != "ket" && kind != "density") fail("kind must be \"ket\" or \"density\"", root_line);
  const char* list_key = kind == "ket" ? "terms" : "entries";
  require_keys(root, {"modes", "kind", list_key}, root_line);
  if (!root["modes"].is_number_integer() || root["modes"].get<long long>() < 1) {
    fail("\"modes\" must be a positive integer", root_line);
  }
  const auto modes = std::size_t(root["modes"].get<long long>());
  const json& list = root[list_key];
  if (!list.is_array()) fail(std::string("\"") + list_key + "\" must be a list", root_line);

  if (kind == "ket") {
    SparseKet psi(modes);
    std::map<Occupation, int> seen;
    for (const auto& term : list) {
      const int line = ctx.take();
      if (!term.is_object()) fail("each term must be an object", line);
      require_keys(term, {"occ", "re", "im"}, line);
      const Occupation n = read_occupation(term["occ"], modes, "occ", line);
      const Complex a = read_amplitude(term, line);
      if (auto [it, fresh] = seen.emplace(n, line); !fresh) {
        fail("basis state " + n.to_string() + " repeats the term on line " + std::to_string(it->second), line);
      }
      psi.add(n, a);
    }
    if (psi.squared_norm() == 0.0) fail("ket has no nonzero amplitude", root_line);
    return psi;
  }

  SparseOperator op(modes);
  std::map<std::pair<Occupation, Occupation>, int> seen;
  for (const auto& entry : list) {
    const int line = ctx.take();
    if (!entry.is_object()) fail("each entry must be an object", line);
    require_keys(entry, {"bra", "ket", "re", "im"}, line);
    const Occupation b = read_occupation(entry["bra"], modes, "bra", line);
    const Occupation k = read_occupation(entry["ket"], modes, "ket", line);
    const Complex a = read_amplitude(entry, line);
    if (auto [it, fresh] = seen.emplace(std::pair{b, k}, line); !fresh) {
      fail("entry " + b.to_string() + "<" + k.to_string().substr(1) + " repeats line " +
               std::to_string(it->second),
           line);
    }
    op.add(b, k, a);
  }
  try {
    return DensityOperator(op);
  } catch (const std::invalid_argument& e) {
    fail(std::string("invalid density operator: ") + e.what(), root_line);
  }
}

StateFile read_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFileError("cannot open " + path.string(), 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

std::string format_state(const SparseKet& psi) {
  std::ostringstream out;
  out << "{\n  \"modes\": " << psi.modes() << ",\n  \"kind\": \"ket\",\n  \"terms\": [";
  bool first = true;
  for (const auto& [n, a] : psi.terms()) {
    out << (first ? "\n" : ",\n") << "    {\"occ\": " << occ_json(n) << ", \"re\": " << number(a.real())
        << ", \"im\": " << number(a.imag()) << "}";
    first = false;
  }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::string format_state(const DensityOperator& rho) {
  std::ostringstream out;
  out << "{\n  \"modes\": " << rho.modes() << ",\n  \"kind\": \"density\",\n  \"entries\": [";
  bool first = true;
  for (const auto& [key, v] : rho.op().entries()) {
    out << (first ? "\n" : ",\n") << "    {\"bra\": " << occ_json(key.first) << ", \"ket\": "
        << occ_json(key.second) << ", \"re\": " << number(v.real()) << ", \"im\": " << number(v.imag())
        << "}";
    first = false;
  }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::string format_state(const StateFile& state) {
  return std::visit([](const auto& s) { return format_state(s); }, state);
}

}  // namespace orbitdim

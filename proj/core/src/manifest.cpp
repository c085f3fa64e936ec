#include <fstream>

#include "mols/error.hpp"
#include "mols/manifest.hpp"

namespace mols {

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out.push_back('"');
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          static const char* hex = "0123456789abcdef";
          out += "\\u00";
          out.push_back(hex[(ch >> 4) & 0xf]);
          out.push_back(hex[ch & 0xf]);
        } else {
          out.push_back(ch);
        }
    }
  }
  out.push_back('"');
}

void append_digest_list(std::string& out, const char* key,
                        const std::vector<std::pair<std::string, std::string>>& files) {
  out += "  \"";
  out += key;
  out += "\": [";
  for (size_t i = 0; i < files.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "{\"path\": ";
    append_escaped(out, files[i].first);
    out += ", \"sha256\": ";
    append_escaped(out, files[i].second);
    out += "}";
  }
  out += files.empty() ? "]" : "\n  ]";
}

} // namespace

std::string run_manifest_json(const RunManifest& m) {
  std::string out = "{\n  \"subcommand\": ";
  append_escaped(out, m.subcommand);
  out += ",\n  \"argv\": [";
  for (size_t i = 0; i < m.argv.size(); ++i) {
    if (i) out += ", ";
    append_escaped(out, m.argv[i]);
  }
  out += "],\n  \"version\": ";
  append_escaped(out, m.version);
  out += ",\n  \"seed\": ";
  out += m.seed ? std::to_string(*m.seed) : "null";
  out += ",\n";
  append_digest_list(out, "inputs", m.inputs);
  out += ",\n";
  append_digest_list(out, "outputs", m.outputs);
  out += "\n}\n";
  return out;
}

void write_run_manifest(const std::string& artifact_path, const RunManifest& m) {
  const std::string path = artifact_path + ".manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoFailure, "cannot open " + path);
  out << run_manifest_json(m);
  if (!out.flush()) fail(Errc::IoFailure, "error writing " + path);
}

} // namespace mols

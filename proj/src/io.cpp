#include "apd/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace apd {

std::string perm_to_text(const Perm& p) {
  std::string out = "n=" + std::to_string(p.n()) + "\n";
  const auto& img = p.images();
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(img[i]);
  }
  out += '\n';
  return out;
}

Perm perm_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
    throw std::invalid_argument("permutation text: expected first line n=<modulus>");
  i64 n;
  try {
    size_t used = 0;
    n = std::stoll(header.substr(2), &used);
    if (used != header.size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("permutation text: bad modulus '" + header + "'");
  }
  if (n < 1 || n > max_modulus)
    throw std::invalid_argument("permutation text: modulus out of range");
  std::vector<i64> images;
  images.reserve(static_cast<size_t>(n));
  i64 v;
  while (in >> v) images.push_back(v);
  if (static_cast<i64>(images.size()) != n)
    throw std::invalid_argument("permutation text: expected " + std::to_string(n) +
                                " images, got " + std::to_string(images.size()));
  return make_perm(images);
}

std::string perm_to_json(const Perm& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n();
  j["perm"] = p.images();
  return j.dump();
}

Perm perm_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("perm"))
    throw std::invalid_argument("permutation json: need keys \"n\" and \"perm\"");
  i64 n = j.at("n").get<i64>();
  std::vector<i64> images = j.at("perm").get<std::vector<i64>>();
  if (n != static_cast<i64>(images.size()))
    throw std::invalid_argument("permutation json: n=" + std::to_string(n) +
                                " but perm has " + std::to_string(images.size()) +
                                " entries");
  return make_perm(images);
}

Perm perm_from_string(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return perm_from_json(text);
  return perm_from_text(text);
}

Perm perm_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return perm_from_string(buf.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace apd

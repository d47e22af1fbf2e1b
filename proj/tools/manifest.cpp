#include "manifest.hpp"

#include <array>
#include <fstream>
#include <memory>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "c4count/errors.hpp"
#include "c4count/version.hpp"

namespace c4count::cli {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md;
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

void RunManifest::add_input(const std::filesystem::path& p) {
  inputs.emplace_back(p.string(), sha256_file(p));
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "c4count.manifest/1";
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json();
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& [path, digest] : inputs) j["inputs"].push_back({{"path", path}, {"sha256", digest}});
  j["outputs"] = outputs;
  return j.dump(2);
}

}  // namespace c4count::cli

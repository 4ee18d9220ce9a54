#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "zetaline/fetch.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zetaline/zeros.hpp"

namespace zetaline {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string today_utc() {
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
  return buf;
}

bool is_number_line(const std::string& line) {
  const char* b = line.c_str();
  char* e = nullptr;
  std::strtod(b, &e);
  if (e == b) return false;
  while (*e == ' ' || *e == '\t') ++e;
  return *e == '\0';
}

struct SplitUrl {
  std::string base;  // scheme://host[:port]
  std::string path;
};

SplitUrl split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw ArgumentError("fetch_zeros: url lacks a scheme: " + url);
  std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https")
    throw ArgumentError("fetch_zeros: unsupported scheme: " + scheme);
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1)
    throw Error("sha256_hex: digest failure");
  static const char hex[] = "0123456789abcdef";
  std::string out(2 * len, '0');
  for (unsigned int i = 0; i < len; ++i) {
    out[2 * i] = hex[digest[i] >> 4];
    out[2 * i + 1] = hex[digest[i] & 0xf];
  }
  return out;
}

std::string fetch_zeros(const std::string& url, const std::string& out_path,
                        const std::string& checksum_hex) {
  const SplitUrl parts = split_url(url);
  httplib::Client client(parts.base);
  client.set_follow_location(true);
  httplib::Result res = client.Get(parts.path);
  if (!res)
    throw FetchError("fetch_zeros: transport failure: " +
                     httplib::to_string(res.error()));
  if (res->status != 200)
    throw FetchError("fetch_zeros: HTTP status " +
                     std::to_string(res->status) + " for " + url);
  const std::string& body = res->body;

  if (!checksum_hex.empty()) {
    std::string got = sha256_hex(body);
    if (got != lower(checksum_hex))
      throw FetchError("fetch_zeros: checksum mismatch: expected " +
                       lower(checksum_hex) + ", got " + got);
  }

  // Normalize: keep declared completeness headers, validate every data line
  // is a lone decimal number, stamp our own provenance header.
  std::ostringstream normalized;
  normalized << "# source: " << url << '\n';
  normalized << "# fetched: " << today_utc() << '\n';
  std::string data_lines;
  std::istringstream in(body);
  std::string line;
  long ln = 0;
  long count = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t at = line.find_first_not_of(" \t");
    if (at == std::string::npos) continue;
    if (line[at] == '#') {
      if (line.find("complete_to:") != std::string::npos ||
          line.find("accuracy:") != std::string::npos)
        normalized << line << '\n';
      continue;
    }
    if (!is_number_line(line.substr(at)))
      throw ParseError("fetch_zeros: unparsable payload at line " +
                       std::to_string(ln));
    data_lines += line.substr(at);
    data_lines += '\n';
    ++count;
  }
  if (count == 0) throw ParseError("fetch_zeros: payload has no ordinates");
  normalized << data_lines;

  const std::string part = out_path + ".part";
  try {
    {
      std::ofstream f(part);
      if (!f) throw FetchError("fetch_zeros: cannot open " + part);
      f << normalized.str();
      f.flush();
      if (!f) throw FetchError("fetch_zeros: write to " + part + " failed");
    }
    load_zeros(part, ZeroFormat::commented);
    std::filesystem::rename(part, out_path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(part, ec);
    throw;
  }
  return out_path;
}

}  // namespace zetaline

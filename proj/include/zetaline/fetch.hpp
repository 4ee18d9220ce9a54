#pragma once

#include <string>

namespace zetaline {

std::string sha256_hex(const std::string& bytes);

// Downloads a plain-text ordinate list over HTTP(S), optionally verifies
// its SHA-256, and rewrites it in the zero-table layout: header comments
// first (source URL, fetch date, any complete_to/accuracy lines the payload
// declared), then one ordinate per line. The result must load cleanly or
// nothing is left on disk; failures surface as FetchError (transport,
// status, checksum) or ParseError (payload shape).
std::string fetch_zeros(const std::string& url, const std::string& out_path,
                        const std::string& checksum_hex = "");

}  // namespace zetaline

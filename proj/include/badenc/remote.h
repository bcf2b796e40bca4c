// Copyright 2026 The badenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BADENC_REMOTE_H_
#define BADENC_REMOTE_H_

#include <chrono>
#include <stdexcept>
#include <string>
#include <string_view>

#include "badenc/minisearch.h"

namespace badenc {

// Wire protocol for attaching an external engine:
//   request:  POST {"query": str, "size": int}
//   response: {"results": [{"url": str, "rank": int, "score": number}]}
class RemoteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Connection refused, timeout, unsupported scheme.
class RemoteTransportError : public RemoteError {
 public:
  using RemoteError::RemoteError;
};

class RemoteStatusError : public RemoteError {
 public:
  RemoteStatusError(int status, const std::string& what)
      : RemoteError(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

// Body did not follow the response schema.
class RemoteFormatError : public RemoteError {
 public:
  using RemoteError::RemoteError;
};

std::string EncodeSearchRequest(std::string_view query, std::size_t size);

// Results are ordered by rank. Throws RemoteFormatError.
Serp DecodeSearchResponse(std::string_view body, std::string_view query,
                          std::size_t size);

// Server-side half of the protocol: answers a request body from any engine.
// Throws RemoteFormatError on a malformed request.
std::string HandleSearchRequest(const SearchEngine& engine,
                                std::string_view request_body);

class RemoteEngine : public SearchEngine {
 public:
  // endpoint: "http://host[:port]/path".
  explicit RemoteEngine(std::string endpoint,
                        std::chrono::milliseconds timeout =
                            std::chrono::seconds(10));

  Serp Search(std::string_view query,
              std::size_t size = kDefaultSerpSize) const override;

  const std::string& endpoint() const { return endpoint_; }

 private:
  std::string endpoint_;
  std::string origin_;
  std::string path_;
  std::chrono::milliseconds timeout_;
};

inline Serp RemoteSearch(const std::string& endpoint, std::string_view query,
                         std::size_t size = kDefaultSerpSize) {
  return RemoteEngine(endpoint).Search(query, size);
}

}  // namespace badenc

#endif  // BADENC_REMOTE_H_

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

#include "badenc/remote.h"

#include <algorithm>

#include "httplib.h"
#include "json.hpp"

namespace badenc {
namespace {

using nlohmann::json;

}  // namespace

std::string EncodeSearchRequest(std::string_view query, std::size_t size) {
  return json{{"query", std::string(query)}, {"size", size}}.dump();
}

Serp DecodeSearchResponse(std::string_view body, std::string_view query,
                          std::size_t size) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw RemoteFormatError(std::string("response is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("results")) {
    throw RemoteFormatError("response missing \"results\"");
  }
  const json& results = doc["results"];
  if (!results.is_array()) {
    throw RemoteFormatError("\"results\" must be an array");
  }
  struct Ranked {
    long long rank;
    SerpResult result;
  };
  std::vector<Ranked> ranked;
  for (const json& item : results) {
    if (!item.is_object() || !item.contains("url") || !item["url"].is_string() ||
        !item.contains("rank") || !item["rank"].is_number_integer() ||
        !item.contains("score") || !item["score"].is_number()) {
      throw RemoteFormatError(
          "each result needs string \"url\", integer \"rank\", number \"score\"");
    }
    ranked.push_back({item["rank"].get<long long>(),
                      {item["url"].get<std::string>(),
                       item["score"].get<double>()}});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Ranked& a, const Ranked& b) { return a.rank < b.rank; });
  Serp serp;
  serp.query = std::string(query);
  serp.size = size;
  for (Ranked& r : ranked) {
    if (serp.results.size() == size) break;
    serp.results.push_back(std::move(r.result));
  }
  return serp;
}

std::string HandleSearchRequest(const SearchEngine& engine,
                                std::string_view request_body) {
  json request;
  try {
    request = json::parse(request_body);
  } catch (const json::parse_error& e) {
    throw RemoteFormatError(std::string("request is not JSON: ") + e.what());
  }
  if (!request.is_object() || !request.contains("query") ||
      !request["query"].is_string()) {
    throw RemoteFormatError("request needs a string \"query\"");
  }
  std::size_t size = kDefaultSerpSize;
  if (request.contains("size")) {
    if (!request["size"].is_number_unsigned() || request["size"] == 0) {
      throw RemoteFormatError("\"size\" must be a positive integer");
    }
    size = request["size"].get<std::size_t>();
  }
  const Serp serp = engine.Search(request["query"].get<std::string>(), size);
  json response;
  response["results"] = json::array();
  for (std::size_t i = 0; i < serp.results.size(); ++i) {
    response["results"].push_back({{"url", serp.results[i].url},
                                   {"rank", i + 1},
                                   {"score", serp.results[i].score}});
  }
  return response.dump();
}

RemoteEngine::RemoteEngine(std::string endpoint,
                           std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), timeout_(timeout) {
  constexpr std::string_view kScheme = "http://";
  if (endpoint_.rfind(kScheme, 0) != 0) {
    throw RemoteTransportError("unsupported endpoint (expected http://): " +
                               endpoint_);
  }
  const std::size_t path_start = endpoint_.find('/', kScheme.size());
  if (path_start == std::string::npos) {
    origin_ = endpoint_;
    path_ = "/";
  } else {
    origin_ = endpoint_.substr(0, path_start);
    path_ = endpoint_.substr(path_start);
  }
  if (origin_.size() == kScheme.size()) {
    throw RemoteTransportError("endpoint has no host: " + endpoint_);
  }
}

Serp RemoteEngine::Search(std::string_view query, std::size_t size) const {
  httplib::Client client(origin_);
  const auto seconds = timeout_.count() / 1000;
  const auto micros = (timeout_.count() % 1000) * 1000;
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);
  auto res = client.Post(path_, EncodeSearchRequest(query, size),
                         "application/json");
  if (!res) {
    throw RemoteTransportError("request to " + endpoint_ +
                               " failed: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw RemoteStatusError(res->status, "endpoint " + endpoint_ +
                                             " returned HTTP " +
                                             std::to_string(res->status));
  }
  return DecodeSearchResponse(res->body, query, size);
}

}  // namespace badenc

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

#include <gtest/gtest.h>

#include <chrono>
#include <thread>

#include "badenc/minisearch.h"
#include "httplib.h"

namespace badenc {
namespace {

class FakeServer {
 public:
  explicit FakeServer(const SearchEngine& engine) {
    server_.Post("/search", [&engine](const httplib::Request& req,
                                      httplib::Response& res) {
      try {
        res.set_content(HandleSearchRequest(engine, req.body), "application/json");
      } catch (const RemoteFormatError& e) {
        res.status = 400;
        res.set_content(e.what(), "text/plain");
      }
    });
    server_.Post("/broken", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("{\"results\": 3}", "application/json");
    });
    server_.Post("/fail", [](const httplib::Request&, httplib::Response& res) {
      res.status = 503;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeServer() {
    server_.stop();
    thread_.join();
  }
  std::string Url(const std::string& path) const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

Index SampleIndex() {
  Index index(AnalyzerMode::kVulnerable);
  index.Add("1", "https://a", "Apple orchard", "apples grow here");
  index.Add("2", "https://b", "Pear orchard", "pears grow here");
  index.Add("3", "https://c", "Stone quarry", "granite");
  return index;
}

TEST(RemoteCodecTest, RequestShape) {
  EXPECT_EQ(EncodeSearchRequest("q", 5), R"({"query":"q","size":5})");
}

TEST(RemoteCodecTest, DecodeSortsByRankAndTruncates) {
  const Serp serp = DecodeSearchResponse(
      R"({"results":[{"url":"b","rank":2,"score":1},{"url":"a","rank":1,"score":2},)"
      R"({"url":"c","rank":3,"score":0.5}]})",
      "q", 2);
  EXPECT_EQ(serp.Urls(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(serp.query, "q");
}

TEST(RemoteCodecTest, DecodeRejectsMalformed) {
  EXPECT_THROW(DecodeSearchResponse("nope", "q", 10), RemoteFormatError);
  EXPECT_THROW(DecodeSearchResponse("{}", "q", 10), RemoteFormatError);
  EXPECT_THROW(DecodeSearchResponse(R"({"results":[{"url":1}]})", "q", 10),
               RemoteFormatError);
}

TEST(RemoteCodecTest, HandleMatchesLocalSearch) {
  const Index index = SampleIndex();
  const std::string body = HandleSearchRequest(index, R"({"query":"orchard","size":1})");
  EXPECT_EQ(DecodeSearchResponse(body, "orchard", 1), index.Search("orchard", 1));
  EXPECT_THROW(HandleSearchRequest(index, R"({"size":1})"), RemoteFormatError);
  EXPECT_THROW(HandleSearchRequest(index, R"({"query":"x","size":0})"),
               RemoteFormatError);
}

TEST(RemoteEngineTest, RoundTripsOverHttp) {
  const Index index = SampleIndex();
  FakeServer server(index);
  const RemoteEngine remote(server.Url("/search"));
  for (const char* q : {"orchard", "granite", "grow here", "missing"}) {
    EXPECT_EQ(remote.Search(q), index.Search(q)) << q;
  }
  EXPECT_EQ(RemoteSearch(server.Url("/search"), "orchard", 1).results.size(), 1u);
}

TEST(RemoteEngineTest, ErrorsAreTyped) {
  const Index index = SampleIndex();
  FakeServer server(index);
  EXPECT_THROW(RemoteEngine(server.Url("/broken")).Search("x"), RemoteFormatError);
  try {
    RemoteEngine(server.Url("/fail")).Search("x");
    ADD_FAILURE();
  } catch (const RemoteStatusError& e) {
    EXPECT_EQ(e.status(), 503);
  }
  EXPECT_THROW(RemoteEngine("https://example.com/"), RemoteTransportError);
  EXPECT_THROW(RemoteEngine("http://"), RemoteTransportError);
}

TEST(RemoteEngineTest, UnreachableEndpoint) {
  int port;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  const RemoteEngine remote("http://127.0.0.1:" + std::to_string(port) + "/",
                            std::chrono::milliseconds(500));
  EXPECT_THROW(remote.Search("x"), RemoteTransportError);
}

}  // namespace
}  // namespace badenc

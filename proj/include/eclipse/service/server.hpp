//   Copyright 2026 The Eclipse Query Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#ifndef ECLIPSE_SERVICE_SERVER_HPP
#define ECLIPSE_SERVICE_SERVER_HPP

#include <memory>
#include <optional>
#include <string>

#include "eclipse/service/csv.hpp"

namespace eclipse::service {

struct ServerOptions {
    std::string host = "127.0.0.1";
    int port = 8080;
    /// Directory mounted at "/" for the explorer's static assets.
    std::optional<std::string> static_dir;
};

/// JSON-over-HTTP front end for one immutable dataset.
///
///   GET  /api/health   -> {"status":"ok"}
///   GET  /api/dataset  -> {"dim", "n", "points"}
///   POST /api/query    -> QueryResponse, or 400 {"error"} for bad requests
///
/// Any other route answers 404 {"error"}. Handlers share the dataset
/// read-only, so requests are served concurrently without locking.
class Server {
public:
    explicit Server(Data data, std::optional<std::string> static_dir = std::nullopt);
    ~Server();

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Binds the listening socket; port 0 picks a free port. Returns the
    /// bound port or throws PortInUse.
    int bind(const std::string& host, int port);

    /// Serves until stop() is called. Requires a prior bind().
    void listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// bind() + listen() on a fresh server.
void serve(Data data, const ServerOptions& options);

} // namespace eclipse::service

#endif // ECLIPSE_SERVICE_SERVER_HPP

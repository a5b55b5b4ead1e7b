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

#include "eclipse/service/server.hpp"

#include <sys/socket.h>

#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "eclipse/service/request.hpp"

namespace eclipse::service {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), kJson);
}

json error_body(const std::string& message) { return json{{"error", message}}; }

} // namespace

struct Server::Impl {
    Data data;
    json dataset_body;
    httplib::Server http;
    bool bound = false;

    explicit Impl(Data d) : data(std::move(d)) {
        json points = json::array();
        for (PointId i = 0; i < data.size(); ++i) {
            const auto row = data.row(i);
            points.push_back(std::vector<double>(row.data(), row.data() + row.size()));
        }
        dataset_body = {{"dim", data.dim()}, {"n", data.size()}, {"points", std::move(points)}};
    }
};

Server::Server(Data data, std::optional<std::string> static_dir)
    : impl_(std::make_unique<Impl>(std::move(data))) {
    auto& http = impl_->http;
    Impl* self = impl_.get();

    // Exclusive binding, so a second server on the same port fails loudly.
    http.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });

    http.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        reply(res, 200, json{{"status", "ok"}});
    });

    http.Get("/api/dataset", [self](const httplib::Request&, httplib::Response& res) {
        reply(res, 200, self->dataset_body);
    });

    http.Post("/api/query", [self](const httplib::Request& req, httplib::Response& res) {
        json body;
        try {
            body = json::parse(req.body);
        } catch (const json::parse_error& e) {
            reply(res, 400, error_body(std::string("invalid JSON: ") + e.what()));
            return;
        }
        try {
            const auto request = request_from_json(body);
            reply(res, 200, to_json(run_query(self->data, request)));
        } catch (const Error& e) {
            spdlog::info("rejected query: {}", e.what());
            reply(res, 400, error_body(e.what()));
        }
    });

    if (static_dir && !http.set_mount_point("/", *static_dir))
        throw Error(Errc::Io, "static directory '" + *static_dir + "' does not exist");

    http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404)
            reply(res, 404, error_body("no route for " + req.method + " " + req.path));
        else if (res.body.empty())
            reply(res, res.status, error_body(httplib::status_message(res.status)));
    });

    http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            what = e.what();
        } catch (...) {
        }
        spdlog::error("request failed: {}", what);
        reply(res, 500, error_body(what));
    });
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
    auto& http = impl_->http;
    int bound = port;
    if (port == 0)
        bound = http.bind_to_any_port(host);
    else if (!http.bind_to_port(host, port))
        bound = -1;
    if (bound <= 0)
        throw Error(Errc::PortInUse, "cannot bind " + host + ":" + std::to_string(port));
    impl_->bound = true;
    spdlog::info("listening on {}:{} ({} points, dim {})", host, bound, impl_->data.size(),
                 impl_->data.dim());
    return bound;
}

void Server::listen() {
    if (!impl_->bound)
        throw Error(Errc::Io, "listen() before bind()");
    impl_->http.listen_after_bind();
}

void Server::stop() { impl_->http.stop(); }

void serve(Data data, const ServerOptions& options) {
    Server server(std::move(data), options.static_dir);
    server.bind(options.host, options.port);
    server.listen();
}

} // namespace eclipse::service

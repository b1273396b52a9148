/*
 * Copyright 2026 The hssdt Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hssdt/transport/tcp.h"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <vector>

#include "hssdt/common/errors.h"

namespace hssdt {
namespace {

[[noreturn]] void SysFail(const std::string& what) {
  Fail(ErrorCode::kTransport, what + ": " + std::strerror(errno));
}

// False on orderly EOF before any byte; throws on errors or mid-read EOF.
bool ReadExact(int fd, uint8_t* buf, size_t n) {
  size_t got = 0;
  while (got < n) {
    ssize_t r = ::recv(fd, buf + got, n - got, 0);
    if (r == 0) {
      if (got == 0) return false;
      Fail(ErrorCode::kTransport, "connection closed mid-frame");
    }
    if (r < 0) {
      if (errno == EINTR) continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) Fail(ErrorCode::kTransport, "timed out");
      SysFail("recv");
    }
    got += static_cast<size_t>(r);
  }
  return true;
}

void WriteAll(int fd, const std::vector<uint8_t>& data) {
  size_t sent = 0;
  while (sent < data.size()) {
    ssize_t r = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (r < 0) {
      if (errno == EINTR) continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) Fail(ErrorCode::kTransport, "timed out");
      SysFail("send");
    }
    sent += static_cast<size_t>(r);
  }
}

// Reads one frame; returns false on clean EOF at a frame boundary.
bool ReadFrame(int fd, uint64_t max_payload, Frame* out) {
  uint8_t header[kFrameHeaderBytes];
  if (!ReadExact(fd, header, sizeof header)) return false;
  FrameHeader h = DecodeFrameHeader(header, max_payload);
  out->type = h.type;
  out->payload.resize(h.length);
  if (h.length > 0 && !ReadExact(fd, out->payload.data(), h.length)) {
    Fail(ErrorCode::kTransport, "connection closed mid-frame");
  }
  return true;
}

addrinfo* Resolve(const Endpoint& ep, bool passive) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  if (passive) hints.ai_flags = AI_PASSIVE;
  addrinfo* res = nullptr;
  std::string port = std::to_string(ep.port);
  int rc = ::getaddrinfo(ep.host.c_str(), port.c_str(), &hints, &res);
  if (rc != 0) {
    Fail(ErrorCode::kTransport, "cannot resolve " + ep.host + ": " + ::gai_strerror(rc));
  }
  return res;
}

void SetTimeouts(int fd, int timeout_ms) {
  timeval tv{};
  tv.tv_sec = timeout_ms / 1000;
  tv.tv_usec = (timeout_ms % 1000) * 1000;
  ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
}

}  // namespace

Endpoint ParseEndpoint(const std::string& text) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    Fail(ErrorCode::kDomain, "endpoint must be host:port, got '" + text + "'");
  }
  Endpoint ep;
  ep.host = text.substr(0, colon);
  unsigned long port = 0;
  try {
    size_t used = 0;
    port = std::stoul(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("port");
  } catch (const std::exception&) {
    Fail(ErrorCode::kDomain, "bad port in '" + text + "'");
  }
  if (port > 65535) Fail(ErrorCode::kDomain, "port out of range in '" + text + "'");
  ep.port = static_cast<uint16_t>(port);
  return ep;
}

TcpServer::TcpServer(ServerNode& node, Endpoint listen, uint64_t max_payload)
    : node_(node), listen_(std::move(listen)), max_payload_(max_payload) {}

TcpServer::~TcpServer() { Stop(); }

void TcpServer::Start() {
  addrinfo* res = Resolve(listen_, true);
  for (addrinfo* ai = res; ai; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 64) == 0) {
      listen_fd_ = fd;
      break;
    }
    ::close(fd);
  }
  ::freeaddrinfo(res);
  if (listen_fd_ < 0) SysFail("cannot listen on " + listen_.host + ":" + std::to_string(listen_.port));
  sockaddr_storage addr{};
  socklen_t len = sizeof addr;
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = addr.ss_family == AF_INET6
              ? ntohs(reinterpret_cast<sockaddr_in6*>(&addr)->sin6_port)
              : ntohs(reinterpret_cast<sockaddr_in*>(&addr)->sin_port);
  acceptor_ = std::thread([this] { AcceptLoop(); });
}

void TcpServer::AcceptLoop() {
  while (!stopping_) {
    pollfd p{listen_fd_, POLLIN, 0};
    int rc = ::poll(&p, 1, 200);
    if (rc <= 0) continue;
    int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) continue;
    std::lock_guard lock(mu_);
    if (stopping_) {
      ::close(fd);
      break;
    }
    open_fds_.push_back(fd);
    workers_.emplace_back([this, fd] { Serve(fd); });
  }
}

void TcpServer::Serve(int fd) {
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  try {
    Frame request;
    while (!stopping_ && ReadFrame(fd, max_payload_, &request)) {
      WriteAll(fd, EncodeFrame(node_.Handle(request)));
    }
  } catch (const Error& e) {
    // Framing is lost after a bad header; report and drop the connection.
    if (e.code() == ErrorCode::kDecode) {
      try {
        WriteAll(fd, EncodeFrame(ErrorFrame(e.code(), e.what())));
      } catch (const Error&) {
      }
    }
  }
  std::lock_guard lock(mu_);
  ::shutdown(fd, SHUT_RDWR);
  ::close(fd);
  open_fds_.remove(fd);
}

void TcpServer::Stop() {
  {
    std::lock_guard lock(mu_);
    stopping_ = true;
    for (int fd : open_fds_) ::shutdown(fd, SHUT_RDWR);
  }
  if (acceptor_.joinable()) acceptor_.join();
  std::list<std::thread> workers;
  {
    std::lock_guard lock(mu_);
    workers.swap(workers_);
  }
  for (auto& t : workers) {
    if (t.joinable()) t.join();
  }
  if (listen_fd_ >= 0) {
    ::close(listen_fd_);
    listen_fd_ = -1;
  }
}

void TcpServer::Wait() {
  while (!stopping_) std::this_thread::sleep_for(std::chrono::milliseconds(200));
}

TcpChannel::TcpChannel(Endpoint remote, Link link, MetricsLedger* ledger, int timeout_ms)
    : remote_(std::move(remote)), link_(link), ledger_(ledger), timeout_ms_(timeout_ms) {}

TcpChannel::~TcpChannel() { Close(); }

void TcpChannel::Close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

void TcpChannel::Connect() {
  addrinfo* res = Resolve(remote_, false);
  std::string last = "no address";
  for (addrinfo* ai = res; ai && fd_ < 0; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    SetTimeouts(fd, timeout_ms_);
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) {
      fd_ = fd;
    } else {
      last = std::strerror(errno);
      ::close(fd);
    }
  }
  ::freeaddrinfo(res);
  if (fd_ < 0) {
    Fail(ErrorCode::kTransport,
         "cannot connect to " + remote_.host + ":" + std::to_string(remote_.port) + ": " + last);
  }
}

Frame TcpChannel::RoundTrip(const Frame& request) {
  if (fd_ < 0) Connect();
  try {
    auto bytes = EncodeFrame(request);
    WriteAll(fd_, bytes);
    if (ledger_) ledger_->RecordMessage(link_, bytes.size());
    Frame reply;
    if (!ReadFrame(fd_, kDefaultMaxPayload, &reply)) {
      Fail(ErrorCode::kTransport, "server closed the connection");
    }
    if (ledger_) ledger_->RecordMessage(link_, kFrameHeaderBytes + reply.payload.size());
    return reply;
  } catch (const Error&) {
    Close();
    throw;
  }
}

}  // namespace hssdt

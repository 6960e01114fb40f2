#include "exec_oracle.hpp"

#include <cerrno>
#include <charconv>
#include <csignal>
#include <cstring>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace hjline::detail {

namespace {

constexpr std::size_t kMaxReplyLength = 4096;

void close_fd(int& fd)
{
    if (fd >= 0) {
        ::close(fd);
        fd = -1;
    }
}

} // namespace

ExecOracle::ExecOracle(unsigned r, std::string command, std::string spec, int timeout_ms)
    : ColourOracle(r, std::move(spec)), command_(std::move(command)), timeout_ms_(timeout_ms)
{
    std::signal(SIGPIPE, SIG_IGN);

    int in_pipe[2];
    int out_pipe[2];
    if (::pipe(in_pipe) != 0) {
        throw OracleRangeError(std::string("exec oracle: pipe failed: ") + std::strerror(errno));
    }
    if (::pipe(out_pipe) != 0) {
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        throw OracleRangeError(std::string("exec oracle: pipe failed: ") + std::strerror(errno));
    }

    pid_ = ::fork();
    if (pid_ < 0) {
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) {
            ::close(fd);
        }
        throw OracleRangeError(std::string("exec oracle: fork failed: ") + std::strerror(errno));
    }
    if (pid_ == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
    ::fcntl(to_child_, F_SETFD, FD_CLOEXEC);
    ::fcntl(from_child_, F_SETFD, FD_CLOEXEC);

    std::string hello;
    try {
        hello = read_line();
    } catch (const OracleRangeError& e) {
        shutdown();
        throw OracleRangeError(std::string("exec oracle handshake failed: ") + e.what());
    }
    const std::string expected = "HJ-ORACLE 1 " + std::to_string(r);
    if (hello != expected) {
        shutdown();
        throw OracleRangeError("exec oracle handshake failed: expected '" + expected + "', got '" + hello + "'");
    }
}

ExecOracle::~ExecOracle() { shutdown(); }

void ExecOracle::shutdown()
{
    close_fd(to_child_);
    close_fd(from_child_);
    if (pid_ > 0) {
        int status = 0;
        // give the child a moment to exit on EOF before killing it
        for (int i = 0; i < 50; ++i) {
            if (::waitpid(pid_, &status, WNOHANG) != 0) {
                pid_ = -1;
                return;
            }
            ::usleep(2000);
        }
        ::kill(pid_, SIGKILL);
        ::waitpid(pid_, &status, 0);
        pid_ = -1;
    }
}

std::string ExecOracle::read_line()
{
    for (;;) {
        if (auto nl = buffer_.find('\n'); nl != std::string::npos) {
            std::string line = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            return line;
        }
        if (buffer_.size() > kMaxReplyLength) {
            throw OracleRangeError("exec oracle: reply line too long");
        }
        pollfd pfd{from_child_, POLLIN, 0};
        const int ready = ::poll(&pfd, 1, timeout_ms_);
        if (ready == 0) {
            throw OracleRangeError("exec oracle: no reply within " + std::to_string(timeout_ms_) + " ms");
        }
        if (ready < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw OracleRangeError(std::string("exec oracle: poll failed: ") + std::strerror(errno));
        }
        char chunk[512];
        const auto got = ::read(from_child_, chunk, sizeof chunk);
        if (got < 0 && errno == EINTR) {
            continue;
        }
        if (got <= 0) {
            throw OracleRangeError("exec oracle: child closed its output");
        }
        buffer_.append(chunk, static_cast<std::size_t>(got));
    }
}

void ExecOracle::write_all(const std::string& data)
{
    std::size_t done = 0;
    while (done < data.size()) {
        const auto n = ::write(to_child_, data.data() + done, data.size() - done);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw OracleRangeError(std::string("exec oracle: write failed: ") + std::strerror(errno));
        }
        done += static_cast<std::size_t>(n);
    }
}

ColourId ExecOracle::evaluate(const Word& w)
{
    if (to_child_ < 0) {
        throw OracleRangeError("exec oracle: process is no longer running");
    }
    try {
        write_all("EVAL " + w.encode() + "\n");
        const auto reply = read_line();
        ColourId colour = 0;
        auto [ptr, ec] = std::from_chars(reply.data(), reply.data() + reply.size(), colour);
        if (reply.empty() || ec != std::errc{} || ptr != reply.data() + reply.size() || colour >= colours()) {
            throw OracleRangeError("exec oracle: invalid reply '" + reply + "'");
        }
        return colour;
    } catch (const OracleRangeError&) {
        shutdown();
        throw;
    }
}

} // namespace hjline::detail

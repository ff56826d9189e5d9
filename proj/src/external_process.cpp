#include "dopetest/errors.hpp"
#include "dopetest/sut.hpp"

#include <cerrno>
#include <condition_variable>
#include <csignal>
#include <cstring>
#include <deque>
#include <fcntl.h>
#include <mutex>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

namespace dopetest {

namespace {

void ignore_sigpipe()
{
    static std::once_flag once;
    std::call_once(once, [] { std::signal(SIGPIPE, SIG_IGN); });
}

class child_process final : public sut_connection {
public:
    explicit child_process(std::vector<std::string> argv) : argv_{std::move(argv)}
    {
        if (argv_.empty())
            throw sut_error(sut_error::kind::spawn_failure, "empty command");
        ignore_sigpipe();
        spawn();
    }

    ~child_process() override { stop(); }

    child_process(const child_process&) = delete;
    child_process& operator=(const child_process&) = delete;

    void send(decimal input) override
    {
        rethrow_failure();
        const std::string line = "IN " + input.to_string() + "\n";
        std::size_t written = 0;
        while (written < line.size()) {
            const ssize_t n = ::write(to_child_, line.data() + written, line.size() - written);
            if (n < 0) {
                if (errno == EINTR)
                    continue;
                if (errno == EPIPE)
                    throw sut_error(sut_error::kind::child_exited, "child closed its input");
                throw sut_error(sut_error::kind::io_failure, std::string{"write failed: "} + std::strerror(errno));
            }
            written += static_cast<std::size_t>(n);
        }
    }

    std::optional<decimal> poll() override
    {
        std::lock_guard lock{mutex_};
        return take_locked();
    }

    symbol receive(std::chrono::milliseconds timeout) override
    {
        std::unique_lock lock{mutex_};
        ready_.wait_for(lock, timeout, [&] { return !queue_.empty() || failure_ || closed_; });
        if (auto v = take_locked())
            return symbol::output(*v);
        return symbol::quiescence();
    }

    void reset() override
    {
        stop();
        spawn();
    }

private:
    std::optional<decimal> take_locked()
    {
        if (!queue_.empty()) {
            const decimal v = queue_.front();
            queue_.pop_front();
            return v;
        }
        if (failure_)
            throw *failure_;
        if (closed_)
            throw sut_error(sut_error::kind::child_exited, "child process exited during the run");
        return std::nullopt;
    }

    void rethrow_failure()
    {
        std::lock_guard lock{mutex_};
        if (failure_)
            throw *failure_;
        if (closed_)
            throw sut_error(sut_error::kind::child_exited, "child process exited during the run");
    }

    void spawn()
    {
        int in_pipe[2];
        int out_pipe[2];
        int err_pipe[2];
        if (::pipe2(in_pipe, O_CLOEXEC) != 0 || ::pipe2(out_pipe, O_CLOEXEC) != 0 || ::pipe2(err_pipe, O_CLOEXEC) != 0)
            throw sut_error(sut_error::kind::spawn_failure, std::string{"pipe failed: "} + std::strerror(errno));

        std::vector<char*> args;
        for (auto& a : argv_)
            args.push_back(a.data());
        args.push_back(nullptr);

        const pid_t pid = ::fork();
        if (pid < 0)
            throw sut_error(sut_error::kind::spawn_failure, std::string{"fork failed: "} + std::strerror(errno));
        if (pid == 0) {
            ::setpgid(0, 0);
            ::dup2(in_pipe[0], STDIN_FILENO);
            ::dup2(out_pipe[1], STDOUT_FILENO);
            ::execvp(args[0], args.data());
            const int error = errno;
            [[maybe_unused]] auto ignored = ::write(err_pipe[1], &error, sizeof error);
            ::_exit(127);
        }

        ::close(in_pipe[0]);
        ::close(out_pipe[1]);
        ::close(err_pipe[1]);
        int error = 0;
        ssize_t n = 0;
        do {
            n = ::read(err_pipe[0], &error, sizeof error);
        } while (n < 0 && errno == EINTR);
        ::close(err_pipe[0]);
        if (n > 0) {
            ::close(in_pipe[1]);
            ::close(out_pipe[0]);
            ::waitpid(pid, nullptr, 0);
            throw sut_error(sut_error::kind::spawn_failure,
                            "cannot execute '" + argv_.front() + "': " + std::strerror(error));
        }

        pid_ = pid;
        to_child_ = in_pipe[1];
        from_child_ = out_pipe[0];
        {
            std::lock_guard lock{mutex_};
            queue_.clear();
            failure_.reset();
            closed_ = false;
        }
        reader_ = std::thread{[this] { read_loop(); }};
    }

    void stop()
    {
        if (pid_ <= 0)
            return;
        ::close(to_child_);
        ::kill(-pid_, SIGKILL);
        ::kill(pid_, SIGKILL);
        if (reader_.joinable())
            reader_.join();
        ::close(from_child_);
        ::waitpid(pid_, nullptr, 0);
        pid_ = -1;
    }

    void read_loop()
    {
        std::string buffer;
        char chunk[4096];
        while (true) {
            const ssize_t n = ::read(from_child_, chunk, sizeof chunk);
            if (n < 0 && errno == EINTR)
                continue;
            if (n <= 0)
                break;
            buffer.append(chunk, static_cast<std::size_t>(n));
            std::size_t newline = 0;
            while ((newline = buffer.find('\n')) != std::string::npos) {
                std::string line = buffer.substr(0, newline);
                buffer.erase(0, newline + 1);
                if (!line.empty() && line.back() == '\r')
                    line.pop_back();
                if (!deliver(line))
                    return;
            }
        }
        std::lock_guard lock{mutex_};
        closed_ = true;
        ready_.notify_all();
    }

    bool deliver(const std::string& line)
    {
        std::lock_guard lock{mutex_};
        if (line.rfind("OUT ", 0) == 0) {
            try {
                queue_.push_back(decimal::parse(line.substr(4)));
                ready_.notify_all();
                return true;
            } catch (const parse_error&) {
            }
        }
        failure_ = sut_error(sut_error::kind::protocol_violation, "unexpected line from child: '" + line + "'");
        ready_.notify_all();
        return false;
    }

    std::vector<std::string> argv_;
    pid_t pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::thread reader_;
    std::mutex mutex_;
    std::condition_variable ready_;
    std::deque<decimal> queue_;
    std::optional<sut_error> failure_;
    bool closed_ = false;
};

} // namespace

std::unique_ptr<sut_connection> external_process(std::vector<std::string> argv)
{
    return std::make_unique<child_process>(std::move(argv));
}

} // namespace dopetest

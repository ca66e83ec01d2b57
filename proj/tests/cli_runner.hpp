#ifndef L1TOP_TESTS_CLI_RUNNER_HPP
#define L1TOP_TESTS_CLI_RUNNER_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli
{

struct Result
{
    int code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Scratch directory holding inputs and captured output.
class Sandbox
{
    public:
        Sandbox()
        {
            dir_ = std::filesystem::temp_directory_path() / ("l1top_cli_" + std::to_string(::getpid()));
            std::filesystem::create_directories(dir_);
        }
        ~Sandbox() { std::filesystem::remove_all(dir_); }
        Sandbox(const Sandbox&) = delete;
        Sandbox& operator=(const Sandbox&) = delete;

        std::string path(const std::string& name) const { return (dir_ / name).string(); }

        void write(const std::string& name, const std::string& text) const
        {
            std::ofstream(dir_ / name, std::ios::binary) << text;
        }

        std::string read(const std::string& name) const { return slurp(dir_ / name); }

        /// Runs the CLI with `args` inside the sandbox; `env` is prefixed verbatim.
        Result run(const std::string& args, const std::string& env = "") const
        {
            const std::string out = path(".stdout"), err = path(".stderr");
            const std::string command = "cd '" + dir_.string() + "' && " + env + " '" + L1TOP_CLI + "' " + args
                                        + " > '" + out + "' 2> '" + err + "'";
            const int status = std::system(command.c_str());
            Result r;
            r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
            r.out = slurp(out);
            r.err = slurp(err);
            return r;
        }

    private:
        std::filesystem::path dir_;
};

}  // namespace cli

#endif

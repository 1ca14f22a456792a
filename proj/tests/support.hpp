#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>

#include "econlex/lexicon.hpp"

namespace test_support {

inline std::filesystem::path data_dir() { return ECONLEX_DATA_DIR; }

/// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        dir_ = std::filesystem::temp_directory_path() /
               ("econlex_" + tag + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return dir_; }
    std::filesystem::path file(const std::string& name) const { return dir_ / name; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        const std::filesystem::path p = dir_ / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }

private:
    std::filesystem::path dir_;
};

inline econlex::lexicon::Lexicon make_lexicon(
    const std::string& name, const std::map<std::string, double>& entries,
    econlex::lexicon::Granularity granularity = econlex::lexicon::Granularity::fine_grained) {
    econlex::lexicon::Lexicon lex;
    lex.name = name;
    lex.entries = entries;
    lex.granularity = granularity;
    return lex;
}

/// Random lexicon over a small synthetic vocabulary (scores on the 0.05 grid).
inline econlex::lexicon::Lexicon random_lexicon(std::mt19937& rng, std::size_t terms,
                                                const std::string& name) {
    econlex::lexicon::Lexicon lex;
    lex.name = name;
    std::uniform_int_distribution<int> grid(-20, 20);
    while (lex.entries.size() < terms) {
        const std::string term = "w" + std::to_string(rng() % (terms * 4));
        lex.entries.emplace(term, grid(rng) * 0.05);
    }
    return lex;
}

}  // namespace test_support

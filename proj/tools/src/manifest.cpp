#include "qlgraph_cli/manifest.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "qlgraph/errors.hpp"

namespace qlgraph::cli {

std::string sha256_hex(const std::string& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw IoError("SHA-256 computation failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return out.str();
}

std::string manifest_path_for(const std::string& primary) {
    return primary + ".manifest.json";
}

void OutputSet::add(const std::string& flag, const std::string& path, std::string content) {
    for (const auto& f : files_) {
        if (f.path == path) {
            throw ValidationError("output path '" + path + "' is used twice");
        }
    }
    files_.push_back({flag, path, std::move(content)});
}

const std::string& OutputSet::primary_path() const {
    if (files_.empty()) {
        throw ValidationError("command produced no output");
    }
    return files_.front().path;
}

nlohmann::json OutputSet::checksums() const {
    auto list = nlohmann::json::array();
    for (const auto& f : files_) {
        list.push_back({{"flag", f.flag}, {"path", f.path}, {"sha256", sha256_hex(f.content)}});
    }
    return list;
}

void OutputSet::commit(const nlohmann::json& manifest_without_outputs) {
    auto manifest = manifest_without_outputs;
    manifest["outputs"] = checksums();
    std::vector<File> all = files_;
    all.push_back({"manifest", manifest_path_for(primary_path()), manifest.dump(2) + "\n"});

    namespace fs = std::filesystem;
    std::vector<std::string> staged;
    auto cleanup = [&] {
        std::error_code ec;
        for (const auto& tmp : staged) {
            fs::remove(tmp, ec);
        }
    };
    for (const auto& f : all) {
        const auto tmp = f.path + ".partial";
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            cleanup();
            throw IoError("cannot open '" + f.path + "' for writing");
        }
        staged.push_back(tmp);
        out << f.content;
        out.close();
        if (!out) {
            cleanup();
            throw IoError("failed to write '" + f.path + "'");
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::error_code ec;
        fs::rename(staged[i], all[i].path, ec);
        if (ec) {
            cleanup();
            throw IoError("cannot move output into place at '" + all[i].path + "': " + ec.message());
        }
    }
}

}  // namespace qlgraph::cli

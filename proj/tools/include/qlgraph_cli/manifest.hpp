#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qlgraph::cli {

std::string sha256_hex(const std::string& data);

/// Files produced by one command. Nothing touches the disk until commit(),
/// which writes every file through a temporary name and renames it into place.
class OutputSet {
public:
    /// `flag` names the command-line option that chose `path`.
    void add(const std::string& flag, const std::string& path, std::string content);
    bool empty() const noexcept { return files_.empty(); }
    const std::string& primary_path() const;
    nlohmann::json checksums() const;
    /// Adds <primary>.manifest.json and writes everything. Throws IoError and
    /// removes any partial files on failure.
    void commit(const nlohmann::json& manifest_without_outputs);

private:
    struct File {
        std::string flag;
        std::string path;
        std::string content;
    };
    std::vector<File> files_;
};

std::string manifest_path_for(const std::string& primary);

}  // namespace qlgraph::cli

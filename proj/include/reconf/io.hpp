#pragma once

#include "reconf/model.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace reconf {

// Text formats. Blank lines and lines starting with '#' are ignored by every
// parser; all parsers throw ParseError with a line number.

Graph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// `g <file>` references are resolved relative to `base_dir`.
ReconfigInstance parse_instance(std::istream& in, const std::filesystem::path& base_dir = {});
void write_instance(std::ostream& out, const ReconfigInstance& inst);

NclInstance parse_ncl(std::istream& in);
void write_ncl(std::ostream& out, const NclInstance& ncl);

/// `p ds`, inline graph block, `k <int>`, `rule tj|tar`, `s ...`, `t ...`.
DsInstance parse_ds(std::istream& in);
void write_ds(std::ostream& out, const DsInstance& ds);

MoveSequence parse_certificate(std::istream& in);
void write_certificate(std::ostream& out, const MoveSequence& seq);

std::vector<Flip> parse_ncl_certificate(std::istream& in);
void write_ncl_certificate(std::ostream& out, const std::vector<Flip>& flips);

/// Sidecar provenance file: one `# map <vertex> <label>` line per vertex.
void write_map(std::ostream& out, const std::vector<std::string>& labels);
std::vector<std::string> parse_map(std::istream& in);

/// Second word of the first `p` line: "graph", "inst", "ncl" or "ds".
std::string file_kind(const std::filesystem::path& path);

Graph load_graph(const std::filesystem::path& path);
ReconfigInstance load_instance(const std::filesystem::path& path);
NclInstance load_ncl(const std::filesystem::path& path);
DsInstance load_ds(const std::filesystem::path& path);
MoveSequence load_certificate(const std::filesystem::path& path);
std::vector<Flip> load_ncl_certificate(const std::filesystem::path& path);

/// Writes `text` to `path`, throwing ParseError if the file cannot be opened.
void save_text(const std::filesystem::path& path, const std::string& text);

template <class T, class Writer>
std::string to_text(const T& value, Writer&& write) {
    std::ostringstream os;
    write(os, value);
    return os.str();
}

}  // namespace reconf

// facts_io.hpp
#ifndef METRISCOPE_FACTS_IO_HPP
#define METRISCOPE_FACTS_IO_HPP

#pragma once

#include "metriscope/model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace metriscope {

/// Reads the JSON facts format. Throws Error on malformed input.
std::vector<ClassInfo> facts_from_json(const std::string &text);
std::vector<ClassInfo> read_facts_file(const std::filesystem::path &path);

/// Deterministic serialization (classes sorted by name, two-space indent).
std::string facts_to_json(const std::vector<ClassInfo> &classes);
void write_facts_file(const std::filesystem::path &path, const std::vector<ClassInfo> &classes);

SystemModel load_model(const std::filesystem::path &facts_path);

} // namespace metriscope

#endif // METRISCOPE_FACTS_IO_HPP

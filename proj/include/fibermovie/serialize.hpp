#pragma once

#include <filesystem>
#include <string>

#include "fibermovie/construction.hpp"

namespace fibermovie {

inline constexpr int kMovieFormatVersion = 1;

std::string serialize_slice(const SliceFibration& sf);
SliceFibration parse_slice(const std::string& text);

std::string serialize_movie(const Movie& m);
Movie parse_movie(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fibermovie

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace hpw {

/// Number of worker threads: HPW_THREADS if set, else hardware concurrency.
int thread_count();

/// Runs body(i) for i in [0, count). Parallel over thread_count() workers;
/// results must be written to disjoint slots so the outcome is independent
/// of the schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// FNV-1a, stable across platforms; used for config/descriptor fingerprints.
std::uint64_t fnv1a(const void* data, std::size_t size);
std::uint64_t fnv1a(const std::string& s);

/// Writes content to path via a temporary file + rename.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

// Little-endian scalar I/O for binary sidecars and containers.
void append_u64(std::string& out, std::uint64_t v);
void append_f64(std::string& out, double v);
std::uint64_t read_u64(const std::string& in, std::size_t& pos);
double read_f64(const std::string& in, std::size_t& pos);

/// Shortest decimal form that round-trips a double; deterministic output
/// formatting for CSV/JSON records.
std::string format_double(double v);

}  // namespace hpw

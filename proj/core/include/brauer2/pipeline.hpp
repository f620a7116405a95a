#pragma once

#include "brauer2/brauer.hpp"
#include "brauer2/surface.hpp"

#include <string>
#include <vector>

namespace brauer2 {

enum class Command { bad_places, enumerate, filter, check, expand_split, residues };
enum class Format { text, tsv };

struct PipelineRequest {
    Command command = Command::bad_places;
    std::string element;                 // check, expand-split, residues
    std::string place;                   // residues
    std::vector<std::string> candidates; // filter: extra candidates
    Format format = Format::text;
    unsigned threads = 1;
};

/// Exit codes: 0 success, 1 invalid input or other error, 2 unsupported
/// geometry, 3 precision cap.
struct Report {
    std::string output;
    std::string diagnostics;
    int exit_code = 0;
};

int exit_code_for(ErrorKind kind);

/// Runs one command. Errors are reported, never thrown; per-candidate
/// failures in a batch are listed and the batch continues.
Report run_pipeline(const SurfaceSpec& spec, const PipelineRequest& request);

} // namespace brauer2

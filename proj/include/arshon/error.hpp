#pragma once

#include <stdexcept>
#include <string>

namespace arshon {

enum class Errc {
    invalid_order,
    invalid_letter,
    alpha_on_odd_order,
    empty_input,
    occurrence_out_of_range,
    length_not_block_aligned,
    invalid_block,
    classification_gap,
    sync_without_unique_ancestor,
    range_out_of_prefix,
    malformed_word,
    cache_format,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace arshon

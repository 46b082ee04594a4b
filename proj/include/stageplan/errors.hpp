#pragma once

#include <stdexcept>
#include <string>

namespace stageplan {

// Base for all library errors. Subclasses map onto the CLI exit-code
// contract: usage_error -> 1, everything else -> 2.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct invalid_stage_error : error {
    explicit invalid_stage_error(const std::string& msg) : error("invalid-stage: " + msg) {}
};

struct shape_error : error {
    explicit shape_error(const std::string& msg) : error("shape: " + msg) {}
};

struct mask_violation_error : error {
    explicit mask_violation_error(const std::string& msg) : error("mask-violation: " + msg) {}
};

struct numeric_error : error {
    explicit numeric_error(const std::string& msg) : error("numeric: " + msg) {}
};

struct config_error : error {
    explicit config_error(const std::string& msg) : error("config: " + msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error("parse: " + msg) {}
};

struct schema_error : error {
    explicit schema_error(const std::string& msg) : error("schema: " + msg) {}
};

struct empty_input_error : error {
    explicit empty_input_error(const std::string& msg) : error("empty-input: " + msg) {}
};

struct augmentation_infeasible_error : error {
    explicit augmentation_infeasible_error(const std::string& msg)
        : error("augmentation-infeasible: " + msg) {}
};

struct data_integrity_error : error {
    explicit data_integrity_error(const std::string& msg) : error("data-integrity: " + msg) {}
};

struct usage_error : error {
    explicit usage_error(const std::string& msg) : error("usage: " + msg) {}
};

}  // namespace stageplan

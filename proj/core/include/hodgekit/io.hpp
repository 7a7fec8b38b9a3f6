#pragma once

#include <stdexcept>
#include <variant>

#include "hodgekit/mixed_model.hpp"

namespace hodgekit {

/// Schema or syntax violation in a model file. `location` is a JSON
/// pointer-style path ("/nilpotents/0/1") or, for syntax errors, the
/// parser's byte-position message.
struct ParseError : std::runtime_error {
    std::string location;
    ParseError(const std::string &loc, const std::string &what)
        : std::runtime_error(loc + ": " + what), location(loc) {}
};

struct ModelFile {
    std::string kind;  // "pure" or "mixed"
    std::variant<PureLocalModel, MixedLocalModel> model;
    std::map<std::string, std::string> metadata;

    bool is_pure() const { return kind == "pure"; }
    const PureLocalModel &pure() const { return std::get<PureLocalModel>(model); }
    const MixedLocalModel &mixed() const { return std::get<MixedLocalModel>(model); }
};

/// Parses and structurally validates a model file. The schema is strict:
/// unknown keys are rejected, scalars use the exact grammar
/// ("a/b", "a/b+c/d*i"), filtrations are given as level → spanning
/// vectors and must be monotone (non-monotone levels are reported with
/// the offending pair of indices).
ModelFile parse_model(const std::string &path);
ModelFile parse_model_text(const std::string &text, const std::string &origin = "<string>");

/// A quotient file: {"dimension": d, "blocks": {"<p>": matrix}}. Block
/// column counts are validated against the model's gr_F^p dimensions.
QuotientTarget parse_quotient(const std::string &path, const MixedLocalModel &mx);
QuotientTarget parse_quotient_text(const std::string &text, const MixedLocalModel &mx,
                                   const std::string &origin = "<string>");

/// A bare matrix file: JSON array of rows of scalar strings.
Mat parse_matrix_file(const std::string &path);

std::string model_to_json(const ModelFile &mf);

}  // namespace hodgekit

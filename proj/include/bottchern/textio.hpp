#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bottchern/model.hpp"

namespace bc {

// Parse failure is a ParseError; a well-formed document describing an
// inconsistent model throws this instead, carrying the full report.
struct ValidationFailure : Error {
    ValidationReport report;
    explicit ValidationFailure(ValidationReport r)
        : Error("model failed validation"), report(std::move(r)) {}
};

// Coefficient grammar:  <rat> | <rat>i | <rat>+<rat>i | <rat>-<rat>i
// with <rat> = [-]digits[/digits]; a bare i is accepted for 1i.
GaussQ parse_gaussian(const std::string& text);

std::string to_string(const Monomial& m, const std::vector<std::string>& names = {});
std::string to_string(const Form& f, const std::vector<std::string>& names = {});

// Form grammar: sum of terms
//   term := [coefficient] [e(a,b)] [word]
//   word := gen('^'gen)*, a trailing '~' marking a conjugate generator,
// e.g.  "phi1^phi2~ - (1+1i) e(-1,1) phi3".  Whitespace-insensitive.
Form parse_form(const std::string& text, const std::vector<std::string>& generator_names);

std::vector<std::string> default_generator_names(int n);

struct ModelDocument {
    Model model;
    std::vector<std::string> generator_names;
    // Optional display annotation per generator: the character exponents of
    // the coordinate expression behind a unitary coframe element.  Purely
    // documentary; arithmetic weights live on forms.
    std::vector<std::optional<Weight>> generator_weights;
};

// Parses and validates; round-trips with emit_model.
ModelDocument parse_model(const std::string& text);

std::string emit_model(const ModelDocument& doc);

}  // namespace bc

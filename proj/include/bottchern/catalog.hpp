#pragma once

#include <optional>

#include "bottchern/bicomplex.hpp"

namespace bc::catalog {

enum class Provenance { published, elementary, derived };

struct ExpectedDim {
    Theory theory;
    int p, q;
    int dim;
    Provenance source;
};

struct HarmonicFact {
    Theory theory;  // which Laplacian
    Form form;
    bool harmonic;
    Provenance source;
};

struct CatalogEntry {
    Model model;
    std::string notes;
    std::vector<ExpectedDim> dims;        // pinned sector dimensions (summed over weights)
    std::vector<int> betti;               // expected Betti numbers, empty when not pinned
    std::optional<bool> bc_formal;
    std::optional<bool> dolbeault_formal;
    std::vector<HarmonicFact> harmonic_facts;
};

const std::vector<std::string>& names();
// Throws UnknownModel for anything outside names().
const CatalogEntry& builtin(const std::string& name);

// Canonical model-document serialization of a built-in model.
std::string document_text(const std::string& name);

// Kernel tables for the compact complex surfaces whose structure equations
// are not shipped here: the lists are regression data for user-supplied
// surface models, checkable with check_surface.
struct SurfaceTable {
    std::string name;
    std::string display_name;
    std::vector<Form> dolbeault_kernel;   // basis of ker of the Dolbeault Laplacian
    std::vector<Form> bott_chern_kernel;  // basis of ker of the Bott-Chern Laplacian
    std::string notes;
};

const std::vector<SurfaceTable>& surface_regression_tables();
const SurfaceTable& surface_table(const std::string& name);

struct SurfaceMismatch {
    Theory theory;
    int p, q;
    int expected_dim;
    int computed_dim;
    bool span_equal;
};

struct SurfaceCheck {
    std::string table;
    bool ok = false;
    std::vector<SurfaceMismatch> mismatches;
};

// Compares the harmonic spaces of a user-supplied two-dimensional model
// against a stored table, sector by sector.
SurfaceCheck check_surface(Bicomplex& bx, const SurfaceTable& table);

}  // namespace bc::catalog

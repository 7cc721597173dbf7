#ifndef HCSUPER_CATALOG_HPP
#define HCSUPER_CATALOG_HPP

#include "hcsuper/harish_chandra.hpp"
#include "hcsuper/invariant_rings.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hcsuper {

/// (g0 + g0, flip) with a = {(h, -h)} for the even Cartan subalgebra h of g0,
/// found as the even basis elements with diagonal ad. Throws NoCertificate when
/// g0 has no valid decomposition certificate and NotEvenType when h centralizes
/// odd elements.
SymmetricPair group_type_pair(const LieSuperalgebra& g0);

enum class Construction { GroupType, RankOne };

struct CatalogEntry {
    std::string name;
    Construction construction = Construction::GroupType;
    std::string description;
    unsigned default_degree = 0;
};

const std::vector<CatalogEntry>& catalog();
/// Throws UnknownEntry.
const CatalogEntry& find_entry(const std::string& name);

/// A constructed entry: pair, roots for the chosen direction and W0.
struct PairData {
    std::string name;
    unsigned default_degree = 0;
    SymmetricPair pair;
    RestrictedRootSystem system;
    WeylGroup weyl;
    /// rank-one entries only
    std::optional<RankOneModel> model;

    /// Names for the a basis: the basis name for unit vectors, a1, a2, ... otherwise.
    [[nodiscard]] std::vector<std::string> a_names() const;
};

PairData build_entry(const std::string& name, const std::optional<Vec>& direction = std::nullopt);

enum class Defect { None, TruncatedN, WrongMultiplicity };

struct VerifyOptions {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    /// random invariant pairs for the multiplicativity check
    std::size_t product_samples = 10;
    Defect defect = Defect::None;
};

struct VerificationRow {
    unsigned degree = 0;
    std::size_t dim_invariants = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_image = 0;
    std::size_t dim_J = 0;
    std::size_t dim_I = 0;
};

struct VerificationReport {
    std::string entry;
    unsigned degree = 0;
    std::vector<VerificationRow> rows;
    bool weyl_invariance = true;
    bool image_in_J = true;
    bool kernel_vanishes = true;
    bool dims_match = true;
    bool multiplicative = true;
    /// the Iwasawa decomposition and the centralizer formula held
    bool iwasawa = true;
    std::vector<std::string> failures;
    double seconds = 0;

    [[nodiscard]] bool ok() const {
        return weyl_invariance && image_in_J && kernel_vanishes && dims_match && multiplicative && iwasawa;
    }
};

VerificationReport verify_main_theorem(const PairData& entry, unsigned d, const VerifyOptions& options = {});
VerificationReport verify_main_theorem(const std::string& entry, unsigned d, const VerifyOptions& options = {});

/// sl(2) with [h, e] = 3e: fails the Jacobi identity on (e, f, h).
LieSuperalgebra planted_jacobi_defect();

} // namespace hcsuper

#endif

#pragma once

#include "entriv/core/integer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace entriv {

// The weight-p pieces whose mod-p homology is tabulated. The first three are
// n-fold suspensions of extended powers of S^{-n}; Bottom means the single
// suspension of an extended power of S^{-1}; Zero means an extended power of S^0.
enum class Family { EnMinus1, EnPlus1, EInfinity, E2Bottom, EInfinityBottom, E1Zero, EInfinityZero };

enum class ClassKind { Q, BetaQ, Power, Cell };

struct DLClass {
    ClassKind kind = ClassKind::Q;
    int s = 0; // for cells: the cell degree
    int degree = 0;
    friend auto operator<=>(const DLClass&, const DLClass&) = default;
};

struct Window {
    int lo = 0;
    int hi = 0;
};

struct DLBasis {
    unsigned p = 0;
    int n = 0;
    Family family = Family::EInfinity;
    Window window;
    std::vector<DLClass> classes; // sorted by degree, then kind
};

// Default window covering every class of the finite families.
Window default_window(unsigned p, int n);

// Odd primes only; throws InvalidInput for p = 2 (use the stunted model).
DLBasis dl_basis(unsigned p, int n, Family family, Window window);

// Classes by admissibility range, any prime. At p = 2, Q^s sits in degree 2s
// and beta Q^s in degree 2s - 1, matching the stunted cells one to one.
DLBasis dl_classes(unsigned p, int n, Family family, Window window);

// RP_a^b with b = nullopt meaning infinity.
struct StuntedModel {
    int bottom = 0;
    std::optional<int> top;
    std::vector<int> cells(Window window) const;
    friend bool operator==(const StuntedModel&, const StuntedModel&) = default;
};

// Families on S^{-n} and S^{-1} only; throws InvalidInput for the S^0 families.
StuntedModel p2_stunted_model(int n, Family family);
// Also covers the S^0 families (RP_0^0 and RP_0^infinity).
StuntedModel stunted_model_any(int n, Family family);

// Mod-p basis in the encoding used for verification: stunted cells at p = 2,
// Dyer-Lashof classes otherwise.
DLBasis verification_basis(unsigned p, int n, Family family, Window window);

// A monomial map between bases: each source class goes to a target class or
// to zero (nullopt).
using ClassMap = std::map<DLClass, std::optional<DLClass>>;

struct DegreeRow {
    std::size_t a = 0, b = 0, c = 0;
    bool injective = true;
    bool composite_zero = true;
    bool exact_middle = true;
    bool surjective = true;
    bool additive = true;
};

struct SequenceCheck {
    std::map<int, DegreeRow> degrees;
    bool degree_preserving = true;
    bool pass = false;
};

// Degreewise exactness of 0 -> A -f-> B -g-> C -> 0 for monomial maps.
SequenceCheck check_short_exact(const DLBasis& a, const DLBasis& b, const DLBasis& c, const ClassMap& f,
                                const ClassMap& g);

enum class Sequence { First, Second };

struct SesReport {
    unsigned p = 0;
    int n = 0;
    Sequence which = Sequence::First;
    Window window;
    DLBasis a, b, c;
    SequenceCheck check;
    bool pass = false;
};

SesReport verify_ses(unsigned p, int n, Sequence which, std::optional<Window> window = std::nullopt);

struct PushoutReport {
    unsigned p = 0;
    int n = 0;
    Window window;
    std::map<int, std::size_t> left_kernel;  // E_{n+1} -> E_2
    std::map<int, std::size_t> right_kernel; // E_inf -> E_inf
    std::map<int, long> euler;               // TL - TR - BL + BR per degree
    std::vector<DLClass> left_kernel_classes;
    std::vector<DLClass> right_kernel_classes;
    bool kernels_equal = false;
    bool euler_zero = false;
    bool pass = false;
};

PushoutReport pushout_rank_check(unsigned p, int n, std::optional<Window> window = std::nullopt);

struct MooreReport {
    unsigned p = 0;
    std::vector<DLClass> bottom_basis;        // E_2 on S^{-1}
    bool basis_is_two_cells = false;
    bool bockstein_pairs = false;             // odd p: beta Q^0 one below Q^0; p = 2: Sq^1 nonzero
    std::map<int, std::size_t> moore_mod_p;   // F_p homology of Z --p--> Z in degrees -1, 0
    std::string moore_integral;               // H_{-1}
    bool homology_matches = false;
    std::map<std::string, std::string> projection; // class -> image under the map to the E_1 piece
    bool projection_to_top_cell = false;
    bool pass = false;
};

MooreReport moore_identification(unsigned p);

struct TransferReport {
    unsigned p = 0;
    Window window;
    std::vector<DLClass> bottom;  // E_inf on S^{-1}, suspended
    std::vector<DLClass> zero;    // E_inf on S^0
    std::vector<DLClass> difference;
    bool pass = false;
};

TransferReport transfer_cofiber_check(unsigned p, std::optional<Window> window = std::nullopt);

Family family_from_string(const std::string& name);
std::string family_name(Family f);
std::string class_label(const DLClass& c);

nlohmann::json to_json_value(const DLBasis& b);
nlohmann::json to_json_value(const SesReport& r);
nlohmann::json to_json_value(const PushoutReport& r);
nlohmann::json to_json_value(const MooreReport& r);
nlohmann::json to_json_value(const TransferReport& r);

} // namespace entriv

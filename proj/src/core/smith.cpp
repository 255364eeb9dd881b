#include "entriv/core/smith.hpp"

#include "entriv/error.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace entriv {

std::size_t SmithForm::rank() const
{
    std::size_t r = 0;
    for (const auto& d : diagonal)
        if (d != 0)
            ++r;
    return r;
}

std::vector<Integer> SmithForm::invariant_factors() const
{
    std::vector<Integer> out;
    for (const auto& d : diagonal)
        if (d > 1)
            out.push_back(d);
    return out;
}

namespace {

SmithForm compute_smith(const IntMatrix& input)
{
    IntMatrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (m(r, c) != 0 && (pr == rows || mpz_cmpabs(m(r, c).get_mpz_t(), m(pr, pc).get_mpz_t()) < 0)) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows)
                break;
            m.swap_rows(t, pr);
            left.swap_rows(t, pr);
            m.swap_cols(t, pc);
            right.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m(r, t) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
                m.add_row_multiple(r, t, -q);
                left.add_row_multiple(r, t, -q);
                if (m(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m(t, c) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
                m.add_col_multiple(c, t, -q);
                right.add_col_multiple(c, t, -q);
                if (m(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Pivot is isolated; enforce divisibility of the remaining block.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
                        bad = r;
                        break;
                    }
            if (bad == rows)
                break;
            m.add_row_multiple(t, bad, 1);
            left.add_row_multiple(t, bad, 1);
        }
        if (m(t, t) < 0) {
            m.negate_row(t);
            left.negate_row(t);
        }
    }

    SmithForm out;
    out.diagonal.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.diagonal.push_back(m(i, i));
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

struct CacheState {
    std::mutex mutex;
    std::optional<std::string> directory;
};

CacheState& cache_state()
{
    static CacheState state;
    return state;
}

std::filesystem::path cache_path(const std::string& dir, const std::string& key)
{
    std::ostringstream name;
    name << "snf-" << std::hex << std::hash<std::string>{}(key) << ".json";
    return std::filesystem::path(dir) / name.str();
}

std::optional<SmithForm> cache_load(const std::filesystem::path& path, const IntMatrix& m, const std::string& key)
{
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.at("matrix").dump() != key)
            return std::nullopt;
        SmithForm snf;
        for (const auto& d : j.at("diagonal"))
            snf.diagonal.push_back(integer_from_json(d));
        snf.left = int_matrix_from_json(j.at("left"), m.rows(), m.rows());
        snf.right = int_matrix_from_json(j.at("right"), m.cols(), m.cols());
        if (snf.diagonal.size() != std::min(m.rows(), m.cols()) || !verify_smith_form(m, snf))
            return std::nullopt;
        return snf;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void cache_store(const std::filesystem::path& path, const SmithForm& snf, const std::string& key)
{
    auto j = to_json_value(snf);
    j["matrix"] = nlohmann::json::parse(key);
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ostringstream tmp_name;
    tmp_name << path.string() << '.' << std::this_thread::get_id() << ".tmp";
    const auto tmp = tmp_name.str();
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << j.dump();
    }
    std::filesystem::rename(tmp, path, ec);
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    std::optional<std::string> dir;
    {
        std::lock_guard lock(cache_state().mutex);
        dir = cache_state().directory;
    }
    // Tiny matrices are cheaper to recompute than to look up.
    if (!dir || m.rows() * m.cols() < 16)
        return compute_smith(m);
    const std::string key = to_json_value(m).dump();
    const auto path = cache_path(*dir, key);
    if (auto hit = cache_load(path, m, key))
        return *hit;
    SmithForm snf = compute_smith(m);
    cache_store(path, snf, key);
    return snf;
}

bool verify_smith_form(const IntMatrix& m, const SmithForm& snf)
{
    if (snf.left.rows() != m.rows() || snf.left.cols() != m.rows() || snf.right.rows() != m.cols() ||
        snf.right.cols() != m.cols())
        return false;
    const std::size_t n = std::min(m.rows(), m.cols());
    if (snf.diagonal.size() != n)
        return false;
    const IntMatrix d = snf.left * m * snf.right;
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
            const Integer expected = (r == c) ? snf.diagonal[r] : Integer(0);
            if (d(r, c) != expected)
                return false;
        }
    for (std::size_t i = 0; i < n; ++i) {
        if (snf.diagonal[i] < 0)
            return false;
        if (i + 1 < n && snf.diagonal[i] == 0 && snf.diagonal[i + 1] != 0)
            return false;
        if (i + 1 < n && snf.diagonal[i + 1] != 0 &&
            !mpz_divisible_p(snf.diagonal[i + 1].get_mpz_t(), snf.diagonal[i].get_mpz_t()))
            return false;
    }
    return abs(determinant(snf.left)) == 1 && abs(determinant(snf.right)) == 1;
}

nlohmann::json to_json_value(const SmithForm& snf)
{
    nlohmann::json j;
    auto diag = nlohmann::json::array();
    for (const auto& d : snf.diagonal)
        diag.push_back(integer_to_json(d));
    j["diagonal"] = std::move(diag);
    j["left"] = to_json_value(snf.left);
    j["right"] = to_json_value(snf.right);
    return j;
}

void install_snf_cache(const std::string& directory)
{
    std::lock_guard lock(cache_state().mutex);
    cache_state().directory = directory;
}

void uninstall_snf_cache()
{
    std::lock_guard lock(cache_state().mutex);
    cache_state().directory.reset();
}

std::optional<std::string> snf_cache_directory()
{
    std::lock_guard lock(cache_state().mutex);
    return cache_state().directory;
}

} // namespace entriv

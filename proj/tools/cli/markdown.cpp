#include "cli.hpp"

#include <sstream>

namespace entriv::cli {

namespace {

bool is_scalar(const nlohmann::json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const nlohmann::json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

bool is_group(const nlohmann::json& j)
{
    return j.is_object() && j.size() == 2 && j.contains("free") && j.contains("torsion") && j["torsion"].is_array();
}

std::string group_text(const nlohmann::json& g)
{
    std::string s;
    const auto free = g["free"].get<std::size_t>();
    if (free == 1)
        s = "Z";
    else if (free > 1)
        s = "Z^" + std::to_string(free);
    for (const auto& d : g["torsion"])
        s += (s.empty() ? "" : " + ") + std::string("Z/") + (d.is_string() ? d.get<std::string>() : d.dump());
    return s.empty() ? "0" : s;
}

bool flat_array(const nlohmann::json& j)
{
    if (!j.is_array())
        return false;
    for (const auto& e : j)
        if (!is_scalar(e))
            return false;
    return true;
}

// An object whose values are all scalars or flat arrays renders as a table.
bool tabular(const nlohmann::json& j)
{
    if (!j.is_object() || j.empty())
        return false;
    for (const auto& [k, v] : j.items())
        if (!is_scalar(v) && !flat_array(v) && !is_group(v))
            return false;
    return true;
}

std::string inline_text(const nlohmann::json& j)
{
    if (is_group(j))
        return group_text(j);
    if (is_scalar(j))
        return scalar_text(j);
    if (flat_array(j)) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i)
            s += (i ? ", " : "") + scalar_text(j[i]);
        return s + "]";
    }
    return "`" + j.dump() + "`";
}

void render(std::ostringstream& os, const std::string& title, const nlohmann::json& j, int level)
{
    const std::string hashes(static_cast<std::size_t>(std::min(level, 6)), '#');
    if (is_scalar(j) || flat_array(j) || is_group(j)) {
        os << "- **" << title << "**: " << inline_text(j) << "\n";
        return;
    }
    os << "\n" << hashes << " " << title << "\n\n";
    if (tabular(j)) {
        os << "| key | value |\n|---|---|\n";
        for (const auto& [k, v] : j.items())
            os << "| " << k << " | " << inline_text(v) << " |\n";
        return;
    }
    if (j.is_array()) {
        if (level >= 5) {
            os << "```json\n" << j.dump() << "\n```\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            render(os, title + "[" + std::to_string(i) + "]", j[i], level + 1);
        return;
    }
    for (const auto& [k, v] : j.items())
        if (is_scalar(v) || flat_array(v) || is_group(v))
            os << "- **" << k << "**: " << inline_text(v) << "\n";
    for (const auto& [k, v] : j.items())
        if (!is_scalar(v) && !flat_array(v) && !is_group(v)) {
            if (level >= 5)
                os << "\n**" << k << "**\n\n```json\n" << v.dump() << "\n```\n";
            else
                render(os, k, v, level + 1);
        }
}

} // namespace

std::string render_markdown(const nlohmann::json& report)
{
    std::ostringstream os;
    os << "# entriv " << report.value("verb", std::string("report")) << "\n\n";
    if (report.contains("pass"))
        os << "- **pass**: " << (report["pass"].get<bool>() ? "true" : "false") << "\n";
    if (report.contains("certifies"))
        os << "- **certifies**: " << report["certifies"].get<std::string>() << "\n";
    if (report.contains("error"))
        os << "- **error**: " << report["error"].get<std::string>() << "\n";
    if (report.contains("golden"))
        render(os, "golden", report["golden"], 2);
    if (report.contains("parameters"))
        render(os, "parameters", report["parameters"], 2);
    if (report.contains("payload"))
        render(os, "payload", report["payload"], 2);
    return os.str();
}

} // namespace entriv::cli

#include "mackeylab/cartan.hpp"

#include <cctype>
#include <sstream>

namespace mlab {

CartanSpec CartanSpec::parse(const std::string& text)
{
    CartanSpec spec;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('+', pos);
        if (next == std::string::npos) next = text.size();
        std::string part = text.substr(pos, next - pos);
        size_t col = pos + 1;  // 1-based column of the component
        // trim whitespace
        size_t a = part.find_first_not_of(" \t");
        size_t b = part.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw Error("empty component in Cartan spec '" + text + "' at column " +
                        std::to_string(col));
        part = part.substr(a, b - a + 1);
        if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])))
            throw Error("bad Cartan component '" + part + "' at column " + std::to_string(col + a));
        char letter = part[0];
        for (size_t i = 1; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw Error("bad rank in Cartan component '" + part + "' at column " +
                            std::to_string(col + a + i));
        int rank = std::stoi(part.substr(1));
        spec.components.push_back({letter, rank});
        if (next == text.size()) break;
        pos = next + 1;
    }
    if (spec.components.empty()) throw Error("empty Cartan spec");
    spec.validate();
    return spec;
}

void CartanSpec::validate() const
{
    if (components.empty()) throw Error("empty Cartan spec");
    for (const auto& c : components) {
        bool ok = false;
        switch (c.letter) {
            case 'A': ok = c.rank >= 1; break;
            case 'B': ok = c.rank >= 2; break;
            case 'C': ok = c.rank >= 2; break;
            case 'D': ok = c.rank >= 3; break;
            case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
            case 'F': ok = c.rank == 4; break;
            case 'G': ok = c.rank == 2; break;
            default: ok = false;
        }
        if (!ok)
            throw Error(std::string("invalid Cartan type ") + c.letter + std::to_string(c.rank));
    }
}

int CartanSpec::total_rank() const
{
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
}

std::string CartanSpec::str() const
{
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += "+";
        s += components[i].letter;
        s += std::to_string(components[i].rank);
    }
    return s;
}

}  // namespace mlab

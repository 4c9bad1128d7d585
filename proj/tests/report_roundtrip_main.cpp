// Reads a structured report on stdin, parses it, re-emits, parses again and
// compares. Chained after the CLI in the integration tests.

#include <iostream>
#include <sstream>

#include "mackeylab/report.hpp"

int main()
{
    try {
        mlab::Report first = mlab::Report::parse(std::cin);
        std::string emitted = first.emit_string();
        mlab::Report second = mlab::Report::parse_string(emitted);
        if (!(first == second)) {
            std::cerr << "round trip mismatch\n";
            return 1;
        }
        if (first.entries.empty()) {
            std::cerr << "empty report\n";
            return 1;
        }
    } catch (const std::exception& err) {
        std::cerr << "parse failure: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

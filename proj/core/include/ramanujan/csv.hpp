#pragma once

/**
 * @file csv.hpp
 * @brief CSV output with a frozen numeric format: every real is printed
 *        with 17 significant digits so reruns are byte-identical and
 *        round-trip exactly through double.
 */

#include <cstdio>
#include <string>
#include <vector>

namespace ramanujan::csv {

inline std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class Writer {
public:
    explicit Writer(std::vector<std::string> header) {
        append_row_(header);
    }

    void row(const std::vector<std::string>& cells) { append_row_(cells); }

    const std::string& str() const { return out_; }

private:
    void append_row_(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ += ',';
            out_ += cells[i];
        }
        out_ += '\n';
    }

    std::string out_;
};

}  // namespace ramanujan::csv

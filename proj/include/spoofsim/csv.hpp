#ifndef SPOOFSIM_CSV_HPP
#define SPOOFSIM_CSV_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace spoofsim {

/// Minimal CSV emitter: '#'-prefixed comment lines, one header row, data
/// rows with floating point at 9 significant digits (diff-stable goldens).
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(const std::string& line) { out_ << "# " << line << "\n"; }

    void header(const std::vector<std::string>& cols) { write_row(cols); }

    void row(const std::vector<std::string>& cells) { write_row(cells); }

    static std::string num(double v) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.9g", v);
        return buf;
    }

    static std::string num(int v) { return std::to_string(v); }

private:
    void write_row(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out_ << ",";
            out_ << cells[i];
        }
        out_ << "\n";
    }

    std::ostream& out_;
};

} // namespace spoofsim

#endif

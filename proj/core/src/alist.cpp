#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "mols/design.hpp"
#include "mols/error.hpp"

namespace mols {

namespace {

struct TokenReader {
  std::istringstream in;
  explicit TokenReader(const std::string& text) : in(text) {}
  int next() {
    long long v;
    if (!(in >> v)) fail(Errc::ParseFailure, "unexpected end of alist data");
    if (v < 0 || v > 1'000'000'000) fail(Errc::ParseFailure, "alist value out of range");
    return static_cast<int>(v);
  }
};

} // namespace

SparseMatrix parse_alist(const std::string& text) {
  TokenReader r(text);
  const int n = r.next(); // columns (variable nodes)
  const int m = r.next(); // rows (check nodes)
  if (n <= 0 || m <= 0) fail(Errc::ParseFailure, "alist dimensions must be positive");
  const int max_col = r.next();
  const int max_row = r.next();
  std::vector<int> col_w(n), row_w(m);
  for (int j = 0; j < n; ++j) {
    col_w[j] = r.next();
    if (col_w[j] > max_col) fail(Errc::ParseFailure, "column weight exceeds declared maximum");
  }
  for (int i = 0; i < m; ++i) {
    row_w[i] = r.next();
    if (row_w[i] > max_row) fail(Errc::ParseFailure, "row weight exceeds declared maximum");
  }
  std::vector<std::vector<int>> cols(n);
  for (int j = 0; j < n; ++j) {
    // padded variant lists max_col entries per column, padding with zeros
    for (int t = 0; t < col_w[j]; ++t) {
      int v = r.next();
      if (v < 1 || v > m) fail(Errc::ParseFailure, "row index out of range in alist column list");
      cols[j].push_back(v - 1);
    }
    long long pos = r.in.tellg();
    for (int t = col_w[j]; t < max_col; ++t) {
      long long before = r.in.tellg();
      long long v;
      if (!(r.in >> v)) {
        r.in.clear();
        r.in.seekg(pos);
        break;
      }
      if (v != 0) { // not padding: belongs to the next list
        r.in.seekg(before);
        break;
      }
    }
  }
  // row lists are redundant; consume them if present and verify consistency
  std::vector<std::vector<int>> rows_seen(m);
  bool have_rows = true;
  {
    long long pos = r.in.tellg();
    long long v;
    if (!(r.in >> v)) have_rows = false;
    else r.in.seekg(pos);
  }
  if (have_rows) {
    for (int i = 0; i < m && have_rows; ++i) {
      for (int t = 0; t < row_w[i]; ++t) {
        long long v;
        if (!(r.in >> v)) fail(Errc::ParseFailure, "truncated alist row list");
        if (v < 1 || v > n) fail(Errc::ParseFailure, "column index out of range in alist row list");
        rows_seen[i].push_back(static_cast<int>(v) - 1);
      }
      for (int t = row_w[i]; t < max_row; ++t) {
        long long before = r.in.tellg();
        long long v;
        if (!(r.in >> v)) {
          r.in.clear();
          break;
        }
        if (v != 0) {
          r.in.seekg(before);
          break;
        }
      }
    }
  }

  SparseMatrix h(m, n, cols);
  if (have_rows) {
    for (int i = 0; i < m; ++i) {
      auto span = h.row(i);
      std::vector<int> expect(span.begin(), span.end());
      auto got = rows_seen[i];
      std::sort(got.begin(), got.end());
      if (got != expect)
        fail(Errc::ParseFailure, "alist row list disagrees with column lists at row " +
                                     std::to_string(i + 1));
    }
  }
  return h;
}

std::string format_alist(const SparseMatrix& h) {
  const int n = h.cols(), m = h.rows();
  int max_col = 0, max_row = 0;
  for (int j = 0; j < n; ++j) max_col = std::max(max_col, static_cast<int>(h.col(j).size()));
  for (int i = 0; i < m; ++i) max_row = std::max(max_row, static_cast<int>(h.row(i).size()));
  std::ostringstream out;
  out << n << ' ' << m << '\n' << max_col << ' ' << max_row << '\n';
  for (int j = 0; j < n; ++j) out << h.col(j).size() << (j + 1 < n ? ' ' : '\n');
  for (int i = 0; i < m; ++i) out << h.row(i).size() << (i + 1 < m ? ' ' : '\n');
  for (int j = 0; j < n; ++j) {
    auto c = h.col(j);
    for (size_t t = 0; t < c.size(); ++t) out << c[t] + 1 << (t + 1 < c.size() ? ' ' : '\n');
  }
  for (int i = 0; i < m; ++i) {
    auto r = h.row(i);
    for (size_t t = 0; t < r.size(); ++t) out << r[t] + 1 << (t + 1 < r.size() ? ' ' : '\n');
  }
  return out.str();
}

SparseMatrix read_alist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoFailure, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_alist(buf.str());
}

void write_alist(const std::string& path, const SparseMatrix& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoFailure, "cannot open " + path + " for writing");
  out << format_alist(h);
  if (!out) fail(Errc::IoFailure, "write to " + path + " failed");
}

} // namespace mols

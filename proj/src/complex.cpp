#include "l1top/complex.hpp"

namespace l1top
{

std::string to_string(const BigInt& x)
{
    return x.str();
}

std::string to_string(const Rational& x)
{
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

namespace
{

BigInt parse_integer(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw std::invalid_argument("empty integer in '" + std::string(text) + "'");
    for (char ch : digits)
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("bad integer '" + std::string(text) + "'");
    if (text.front() == '+')
        text.remove_prefix(1);
    return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

DeltaComplex::DeltaComplex(std::vector<Index> cell_counts, std::vector<FaceTable> faces)
    : counts_(std::move(cell_counts)), faces_(std::move(faces))
{
    if (counts_.empty())
        throw std::invalid_argument("a complex needs at least dimension 0");
    if (faces_.size() + 1 != counts_.size())
        throw std::invalid_argument("face tables must cover dimensions 1.." + std::to_string(dims()));
}

std::pair<int, Index> DeltaComplex::face_by_vertices(int n, Index cell, unsigned mask) const
{
    int dim = n;
    for (int v = n; v >= 0; --v)
    {
        if (mask & (1u << v))
            continue;
        cell = face(dim, cell, v);
        --dim;
    }
    return {dim, cell};
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

ValidationReport validate_complex(const DeltaComplex& K)
{
    ValidationReport report;
    auto push = [&](Violation::Kind kind, int n, Index c, std::string msg) {
        report.violations.push_back({kind, n, c, std::move(msg)});
    };

    for (int n = 0; n <= K.dims(); ++n)
        if (K.cell_count(n) < 0)
            push(Violation::Kind::malformed_table, n, -1, "negative cell count");

    // Structural pass first; identities only make sense on a well-formed table.
    bool well_formed = report.ok();
    for (int n = 1; n <= K.dims(); ++n)
    {
        const auto& table = K.face_table(n);
        if (static_cast<Index>(table.size()) != K.cell_count(n))
        {
            push(Violation::Kind::malformed_table, n, -1,
                 "face table has " + std::to_string(table.size()) + " rows, expected "
                     + std::to_string(K.cell_count(n)));
            well_formed = false;
            continue;
        }
        for (Index c = 0; c < K.cell_count(n); ++c)
        {
            if (static_cast<int>(table[c].size()) != n + 1)
            {
                push(Violation::Kind::malformed_table, n, c,
                     "cell has " + std::to_string(table[c].size()) + " faces, expected "
                         + std::to_string(n + 1));
                well_formed = false;
                continue;
            }
            for (int i = 0; i <= n; ++i)
            {
                Index f = table[c][i];
                if (f < 0 || f >= K.cell_count(n - 1))
                {
                    push(Violation::Kind::dangling_face, n, c,
                         "face " + std::to_string(i) + " -> " + std::to_string(f)
                             + " is not a " + std::to_string(n - 1) + "-cell");
                    well_formed = false;
                }
            }
        }
    }
    if (!well_formed)
        return report;

    for (int n = 2; n <= K.dims(); ++n)
        for (Index c = 0; c < K.cell_count(n); ++c)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                {
                    Index lhs = K.face(n - 1, K.face(n, c, j), i);
                    Index rhs = K.face(n - 1, K.face(n, c, i), j - 1);
                    if (lhs != rhs)
                        push(Violation::Kind::simplicial_identity, n, c,
                             "d_" + std::to_string(i) + " d_" + std::to_string(j) + " = "
                                 + std::to_string(lhs) + " but d_" + std::to_string(j - 1) + " d_"
                                 + std::to_string(i) + " = " + std::to_string(rhs));
                }
    return report;
}

IntChain to_integer_chain(const Chain& c)
{
    IntChain out(c.complex(), c.degree());
    for (const auto& [cell, value] : c.coeffs())
    {
        if (!is_integer(value))
            throw std::domain_error("chain has non-integer coefficient " + to_string(value)
                                    + " on cell " + std::to_string(cell));
        out.add(cell, numerator(value));
    }
    return out;
}

Chain to_rational_chain(const IntChain& c)
{
    Chain out(c.complex(), c.degree());
    for (const auto& [cell, value] : c.coeffs())
        out.add(cell, Rational(value));
    return out;
}

CellMap identity_map(const ComplexPtr& complex)
{
    CellMap f{complex, complex, {}};
    for (int n = 0; n <= complex->dims(); ++n)
    {
        std::vector<Index> row(complex->cell_count(n));
        for (Index c = 0; c < complex->cell_count(n); ++c)
            row[c] = c;
        f.assign.push_back(std::move(row));
    }
    return f;
}

ValidationReport validate_cell_map(const CellMap& f)
{
    ValidationReport report;
    const DeltaComplex& S = *f.source;
    const DeltaComplex& T = *f.target;
    auto push = [&](Violation::Kind kind, int n, Index c, std::string msg) {
        report.violations.push_back({kind, n, c, std::move(msg)});
    };
    if (static_cast<int>(f.assign.size()) != S.dims() + 1)
    {
        push(Violation::Kind::malformed_table, -1, -1,
             "assignment covers " + std::to_string(f.assign.size()) + " dimensions, source has "
                 + std::to_string(S.dims() + 1));
        return report;
    }
    for (int n = 0; n <= S.dims(); ++n)
    {
        if (static_cast<Index>(f.assign[n].size()) != S.cell_count(n))
        {
            push(Violation::Kind::malformed_table, n, -1, "assignment row has wrong length");
            return report;
        }
        for (Index c = 0; c < S.cell_count(n); ++c)
        {
            Index img = f.assign[n][c];
            if (img < 0 || img >= T.cell_count(n))
                push(Violation::Kind::dangling_face, n, c,
                     "image " + std::to_string(img) + " is not a " + std::to_string(n)
                         + "-cell of the target");
        }
    }
    if (!report.ok())
        return report;
    for (int n = 1; n <= S.dims(); ++n)
        for (Index c = 0; c < S.cell_count(n); ++c)
            for (int i = 0; i <= n; ++i)
            {
                Index lhs = f.assign[n - 1][S.face(n, c, i)];
                Index rhs = T.face(n, f.assign[n][c], i);
                if (lhs != rhs)
                    push(Violation::Kind::simplicial_identity, n, c,
                         "face " + std::to_string(i) + " maps to " + std::to_string(lhs)
                             + " but the image cell's face is " + std::to_string(rhs));
            }
    return report;
}

}  // namespace l1top

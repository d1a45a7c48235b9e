#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hpc/bounds.hpp"
#include "hpc/recipe.hpp"

namespace hpc {

// Construction columns, in table order.
enum class Column { star, alphabet, perfect, flaass, split };
inline constexpr std::array<Column, 5> kAllColumns = {Column::star, Column::alphabet, Column::perfect, Column::flaass,
                                                      Column::split};

std::string_view column_label(Column c) noexcept;  // "*", "q", "P", "F", "S"
// Columns meaningful for this alphabet size.
std::vector<Column> table_columns(int q);

struct Plan {
    int n = 0;
    RecipePtr recipe;  // predicts (b,c) with b >= c on H(n,q)
};

enum class Status { settled, gap, unknown };
std::string_view status_marker(Status s) noexcept;  // ".", "-?-", "???"

struct AdmissibilityRecord {
    int q = 0, b = 0, c = 0;
    LowerBound lb;
    std::map<Column, Plan> columns;
    std::optional<Plan> ub;
    Status status = Status::unknown;
    std::vector<std::string> notes;  // advisory only

    int sum() const noexcept { return b + c; }
    int reduced_sum() const noexcept;
};

class Planner {
public:
    explicit Planner(int depth_limit = 4) : depth_(depth_limit) {}

    // Best witness over all columns; b and c in either order.
    std::optional<Plan> plan(int q, int b, int c);
    std::map<Column, Plan> columns(int q, int b, int c);

    // A witness on exactly H(n,q), n >= the planned n, padded by extension.
    std::optional<RecipePtr> witness_at(int q, int b, int c, int n);

private:
    struct FaceBase {
        int n, b, c, k;  // b, c oriented so the faces sit in color 1
        RecipePtr recipe;
    };

    using Key = std::tuple<int, int, int, int>;
    std::optional<Plan> best(int q, int b, int c, int depth);
    std::map<Column, Plan> columns_at(int q, int b, int c, int depth);
    const std::vector<FaceBase>& face_bases(int q, int sum, int depth);

    int depth_;
    std::map<Key, std::optional<Plan>> memo_;
    std::map<Key, std::map<Column, Plan>> column_memo_;
    std::map<Key, std::vector<FaceBase>> face_memo_;
};

// Rows for b+c = q, 2q, ..., max_bc that pass the necessary conditions.
std::vector<AdmissibilityRecord> build_table(int q, int max_bc, Planner& planner);
std::vector<AdmissibilityRecord> build_table(int q, int max_bc);

void write_table_tsv(std::ostream& os, int q, const std::vector<AdmissibilityRecord>& rows);
void write_table_text(std::ostream& os, int q, const std::vector<AdmissibilityRecord>& rows);

// Reference tables: "# q=N", a header line, tab-separated rows. Cells are
// integers, "-" (no construction), "?" (no UB) or a status marker.
struct ReferenceTable {
    int q = 0;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

ReferenceTable parse_reference(std::istream& in);
ReferenceTable to_reference(int q, const std::vector<AdmissibilityRecord>& rows);

struct CellDiff {
    int b = 0, c = 0;
    std::string column;
    std::string expected, actual;
    bool improvement = false;  // smaller UB than the reference
};

// Rows of the reference with b+c above max_bc are ignored (0 = no limit).
std::vector<CellDiff> compare_with_reference(const std::vector<AdmissibilityRecord>& rows, const ReferenceTable& ref,
                                             int max_bc = 0);
std::string format_diff(const std::vector<CellDiff>& diff);

}  // namespace hpc

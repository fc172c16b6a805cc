#include <algorithm>
#include <string>

#include "framecast/error.hpp"
#include "framecast/frame.hpp"
#include "framecast/linalg.hpp"

namespace framecast {

namespace {

void check_partition(const std::vector<std::vector<std::size_t>>& partition, std::size_t m)
{
    std::vector<int> seen(m, 0);
    for (const auto& part : partition) {
        if (part.empty()) throw FrameError(ErrorKind::PartitionInvalid, "empty part");
        for (std::size_t i : part) {
            if (i >= m) {
                throw FrameError(ErrorKind::PartitionInvalid,
                                 "index " + std::to_string(i) + " out of range for " +
                                     std::to_string(m) + " vectors");
            }
            if (seen[i]++) {
                throw FrameError(ErrorKind::PartitionInvalid,
                                 "index " + std::to_string(i) + " appears twice");
            }
        }
    }
    const auto missing = std::find(seen.begin(), seen.end(), 0);
    if (missing != seen.end()) {
        throw FrameError(ErrorKind::PartitionInvalid,
                         "index " + std::to_string(missing - seen.begin()) + " is not covered");
    }
}

} // namespace

SubframeUnion subframe_parseval_union(const Frame& frame,
                                      const std::vector<std::vector<std::size_t>>& partition,
                                      const Tolerances& tol, double coincide_tol)
{
    const std::size_t m = frame.size();
    check_partition(partition, m);

    ParsevalOptions opts;
    opts.tol = tol;
    const ParsevalResult whole = to_parseval(frame, opts);

    SubframeUnion out;
    std::size_t rank_sum = 0;
    for (const auto& part : partition) {
        Frame sub{frame.vectors.select_rows(part), {}, frame.basis_note};
        out.parts.push_back(to_parseval(sub, opts));
        rank_sum += out.parts.back().span_dim;
    }
    if (rank_sum != whole.span_dim) {
        throw FrameError(ErrorKind::DirectSumViolated,
                         "part spans have total dimension " + std::to_string(rank_sum) +
                             " but the frame spans " + std::to_string(whole.span_dim));
    }

    out.frame = {ComplexMatrix(m, frame.dim()), frame.labels, frame.basis_note};
    out.block_synthesis = ComplexMatrix(rank_sum, m);
    std::size_t row0 = 0;
    std::size_t col0 = 0;
    for (std::size_t p = 0; p < partition.size(); ++p) {
        const ParsevalResult& pr = out.parts[p];
        for (std::size_t a = 0; a < partition[p].size(); ++a) {
            auto src = pr.parseval[a];
            std::copy(src.begin(), src.end(), out.frame.vectors.row(partition[p][a]).begin());
            for (std::size_t k = 0; k < pr.span_dim; ++k)
                out.block_synthesis(row0 + k, col0 + a) = pr.w(k, a);
        }
        row0 += pr.span_dim;
        col0 += partition[p].size();
    }

    out.bounds = span_frame_bounds(out.frame, tol.rank);
    const auto block_eig = herm_eig(multiply_adjoint(out.block_synthesis, out.block_synthesis));
    out.block_bounds = {block_eig.values.front(), block_eig.values.back()};

    for (std::size_t i = 0; i < m; ++i)
        out.deviation = std::max(out.deviation, distance(out.frame[i], whole.parseval[i]));
    out.coincides = out.deviation <= coincide_tol;
    return out;
}

} // namespace framecast

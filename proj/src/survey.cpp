#include "hyperq/survey.hpp"

#include "hyperq/coloring.hpp"
#include "hyperq/errors.hpp"
#include "hyperq/hgr_io.hpp"
#include "hyperq/rng.hpp"

namespace hyperq {

void SurveyConfig::validate() const
{
    if (ks.empty())
        throw InputError("survey: no uniformity k given");
    for (auto k : ks)
        if (k < 2)
            throw InputError("survey: k must be at least 2 (loopless instances)");
    if (n_min > n_max || m_min > m_max || m_min == 0)
        throw InputError("survey: empty or invalid n/m range");
    if (*std::max_element(ks.begin(), ks.end()) > n_max)
        throw InputError("survey: k exceeds the largest n");
    budget.validate();
}

SurveyRow survey_instance(const SurveyConfig& config, std::size_t index)
{
    SurveyRow row;
    row.index = index;
    Rng rng(derive_seed(config.seed, index));
    const std::uint64_t k = config.ks[rng.below(config.ks.size())];
    const std::uint64_t n = rng.between(std::max(config.n_min, k), config.n_max);
    std::uint64_t m = rng.between(config.m_min, config.m_max);
    row.m_drawn = m;
    const std::uint64_t pair_cap = (n * (n - 1) / 2) / (k * (k - 1) / 2);
    m = std::min(m, pair_cap);
    const std::uint64_t gen_seed = rng.next();

    row.spec.family = Family::random_linear;
    row.spec.n = n;
    row.spec.k = k;
    row.spec.seed = gen_seed;
    for (; m >= 1; --m) {
        row.spec.m = m;
        try {
            row.instance = generate(row.spec);
            break;
        } catch (const GenerationError& e) {
            row.error = e.what();
        }
    }
    if (m == 0)
        return row;
    row.error.clear();
    row.verdict = verify_conjecture(row.instance, config.budget, config.exact);
    return row;
}

std::vector<SurveyRow> run_survey(const SurveyConfig& config, unsigned jobs)
{
    config.validate();
    return parallel_map(config.count, jobs,
                        [&](std::size_t i) { return survey_instance(config, i); });
}

std::string render_survey(const std::vector<SurveyRow>& rows)
{
    std::string out;
    std::size_t counts[4] = {0, 0, 0, 0};
    std::size_t failed = 0;
    for (const auto& row : rows) {
        out += "instance " + std::to_string(row.index) + " family=\"" + row.spec.to_string() + "\"";
        if (!row.error.empty()) {
            out += " error=\"" + row.error + "\"\n";
            ++failed;
            continue;
        }
        const auto& v = row.verdict;
        out += " input=" + input_digest(row.instance);
        out += " n=" + std::to_string(v.stats.n) + " m=" + std::to_string(v.stats.m);
        out += " delta1=" + std::to_string(v.stats.max_degree);
        out += " delta2=" + std::to_string(v.stats.delta2);
        out += " bf=" + std::to_string(v.bounds.bf);
        if (v.q_exact)
            out += " q=" + std::to_string(v.q_upper);
        else
            out += " q=[" + std::to_string(v.q_lower) + "," + std::to_string(v.q_upper) + "]";
        out += " status=" + std::string(to_string(v.status));
        out += " tags=" + join_tags(v.applicable);
        if (v.status == Status::violated) {
            out += " alarm=" + v.alarm;
            out += " witness_proper=" + std::string(is_proper(row.instance, v.witness) ? "true" : "false");
            out += " witness=";
            for (std::size_t i = 0; i < v.witness.colors.size(); ++i)
                out += (i ? "," : "") + std::to_string(v.witness.colors[i]);
        }
        out += '\n';
        ++counts[static_cast<int>(v.status)];
    }
    out += "summary count=" + std::to_string(rows.size());
    out += " holds=" + std::to_string(counts[static_cast<int>(Status::holds)]);
    out += " violated=" + std::to_string(counts[static_cast<int>(Status::violated)]);
    out += " unresolved=" + std::to_string(counts[static_cast<int>(Status::unresolved)]);
    out += " out_of_scope=" + std::to_string(counts[static_cast<int>(Status::out_of_scope)]);
    out += " failed=" + std::to_string(failed) + "\n";
    return out;
}

int survey_exit_code(const std::vector<SurveyRow>& rows)
{
    bool unresolved = false;
    for (const auto& row : rows) {
        if (!row.error.empty()) {
            unresolved = true;
            continue;
        }
        if (row.verdict.status == Status::violated)
            return 3;
        if (row.verdict.status == Status::unresolved)
            unresolved = true;
    }
    return unresolved ? 4 : 0;
}

} // namespace hyperq

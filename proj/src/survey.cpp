#include "chromkh/survey.hpp"

#include "chromkh/error.hpp"

namespace chromkh {

std::vector<BraidWord> three_braid_family(const std::vector<int>& exponents, std::size_t max_syllables,
                                          std::size_t max_crossings) {
    std::vector<BraidWord> out;
    std::vector<int> current;
    auto emit = [&] {
        BraidWord b;
        b.strands = 3;
        for (std::size_t k = 0; k < current.size(); ++k) {
            int gen = k % 2 == 0 ? 1 : 2;
            int a = current[k];
            for (int t = 0; t < std::abs(a); ++t) b.letters.push_back(a > 0 ? gen : -gen);
        }
        out.push_back(std::move(b));
    };
    auto rec = [&](auto&& self, std::size_t used) -> void {
        if (!current.empty()) emit();
        if (current.size() == max_syllables) return;
        for (int a : exponents) {
            if (a == 0) continue;
            if (!current.empty() && (a > 0) != (current.front() > 0)) continue;
            std::size_t n = static_cast<std::size_t>(std::abs(a));
            if (used + n > max_crossings) continue;
            current.push_back(a);
            self(self, used + n);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool SurveyEntry::only_z2() const {
    for (const auto& o : torsion_orders)
        if (o != "2") return false;
    return true;
}

std::vector<SurveyEntry> survey_braids(const std::vector<BraidWord>& family, const KhovanovOptions& opt) {
    std::vector<SurveyEntry> out;
    for (const auto& b : family) {
        SurveyEntry e;
        e.braid = braid_to_string(b);
        auto d = braid_closure(b);
        e.crossings = d.crossing_count();
        e.components = link_components(d);
        e.adequate_plus = is_adequate(d, d.all_plus());
        e.adequate_minus = is_adequate(d, LinkDiagram::all_minus());
        try {
            auto rep = braid_adequacy_predicates(b);
            e.predicted_adequate = rep.predicted_adequate;
            e.predicts_z2 = rep.predicts_z2_torsion;
        } catch (const InvalidArgument&) {
        }
        try {
            auto h = khovanov_homology(d, opt);
            for (const auto& [deg, g] : h) {
                if (g.is_free()) continue;
                e.torsion[deg] = g.torsion_part();
                for (const auto& t : g.torsion()) e.torsion_orders.insert(t.str());
            }
        } catch (const BudgetError& err) {
            e.skipped = true;
            e.skip_reason = err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace chromkh

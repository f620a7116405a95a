#include "brauer2/pipeline.hpp"

#include <sstream>

namespace brauer2 {

namespace {

const char* kTsvHeader = "element\tplace\tresidue\tverdict\n";

std::string join_places(const std::vector<PlaceK>& places)
{
    std::string out;
    for (std::size_t i = 0; i < places.size(); ++i)
        out += (i ? ", " : "") + places[i].to_string();
    return out.empty() ? "none" : out;
}

std::string join_valuations(const std::vector<PointValuation>& vals)
{
    std::string out;
    for (std::size_t i = 0; i < vals.size(); ++i)
        out += (i ? ", " : "") + vals[i].point + ": " + std::to_string(vals[i].valuation);
    return out;
}

void tsv_row(std::ostream& out, const std::string& element, const std::string& place,
             const std::string& residue, const std::string& verdict)
{
    out << element << '\t' << place << '\t' << residue << '\t' << verdict << '\n';
}

class Run {
public:
    Run(const SurfaceSpec& spec, const PipelineRequest& req)
        : spec_(spec), req_(req), L_(std::make_shared<const EtaleAlgebra>(spec.f, spec.precision)),
          S_(bad_places_of(spec))
    {
    }

    Report execute()
    {
        if (req_.format == Format::tsv)
            out_ << kTsvHeader;
        else
            out_ << "f = " << to_string_xt(spec_.f) << '\n'
                 << "mode = " << to_string(spec_.mode) << '\n';
        switch (req_.command) {
        case Command::bad_places:
            bad_places();
            break;
        case Command::enumerate:
            enumerate();
            break;
        case Command::filter:
            filter();
            break;
        case Command::check:
            check();
            break;
        case Command::expand_split:
            expand_split();
            break;
        case Command::residues:
            residues();
            break;
        }
        return {out_.str(), diag_.str(), code_};
    }

private:
    bool text() const { return req_.format == Format::text; }

    void note_error(const std::string& what, const Error& err)
    {
        diag_ << "error: " << what << ": " << to_string(err.kind()) << ": " << err.what() << '\n';
        code_ = std::max(code_, exit_code_for(err.kind()));
    }

    void bad_places()
    {
        if (text()) {
            out_ << "bad places (" << S_.size() << "): " << join_places(S_.places()) << '\n';
            return;
        }
        for (const auto& v : S_.places())
            tsv_row(out_, "-", v.to_string(), "-", "bad");
    }

    std::vector<KernelClass> enumeration()
    {
        return enumerate_unramified_kernel(*L_, S_, spec_.mode, spec_.components);
    }

    void enumerate()
    {
        const auto classes = enumeration();
        if (text()) {
            out_ << "S = " << join_places(S_.places()) << '\n'
                 << "S-unramified kernel classes: " << classes.size() << '\n';
            for (const auto& c : classes)
                out_ << "  " << c.to_string() << '\n';
            return;
        }
        for (const auto& c : classes)
            tsv_row(out_, c.to_string(), "-", "-", "S-unramified");
    }

    void filter()
    {
        std::vector<EtaleElement> candidates;
        try {
            for (const auto& c : enumeration())
                candidates.push_back(c.representative());
        } catch (const Error& err) {
            note_error("enumeration", err);
        }
        std::vector<FilterRow> parse_errors;
        for (const auto& text : req_.candidates) {
            try {
                candidates.push_back(parse_element(text, *L_));
            } catch (const Error& err) {
                FilterRow row;
                row.candidate = text;
                row.error_kind = err.kind();
                row.message = err.what();
                parse_errors.push_back(std::move(row));
            }
        }
        std::vector<FilterRow> rows = br_X_filter(candidates, *L_, S_, spec_.mode, req_.threads);
        for (auto& r : parse_errors)
            rows.push_back(std::move(r));
        std::size_t pass = 0, fail = 0, error = 0;
        if (text())
            out_ << "S = " << join_places(S_.places()) << '\n'
                 << "candidates: " << rows.size() << '\n';
        for (const auto& r : rows) {
            switch (r.verdict) {
            case Verdict::pass:
                ++pass;
                break;
            case Verdict::fail:
                ++fail;
                break;
            case Verdict::error:
                ++error;
                code_ = std::max(code_, exit_code_for(*r.error_kind));
                break;
            }
            print_row(r);
        }
        if (text())
            out_ << "summary: " << pass << " PASS, " << fail << " FAIL, " << error << " ERROR\n";
    }

    void print_row(const FilterRow& r)
    {
        const std::string verdict = to_string(r.verdict);
        if (!text()) {
            if (r.verdict == Verdict::fail)
                tsv_row(out_, r.candidate, r.place->to_string(), r.residue->to_string(), verdict);
            else if (r.verdict == Verdict::pass)
                tsv_row(out_, r.candidate, "-", "-", verdict);
            else
                tsv_row(out_, r.candidate, "-", "-",
                        verdict + " " + to_string(*r.error_kind) + ": " + r.message);
            return;
        }
        out_ << (r.verdict == Verdict::error ? "ERROR " : verdict + "  ") << r.candidate << '\n';
        if (r.verdict == Verdict::fail) {
            out_ << "      place " << r.place->to_string() << ", residue " << r.residue->to_string()
                 << ", not a square in the fiber field\n"
                 << "      valuations: " << join_valuations(r.valuations) << '\n';
        } else if (r.verdict == Verdict::error) {
            out_ << "      " << to_string(*r.error_kind) << ": " << r.message << '\n';
        }
    }

    void check()
    {
        const EtaleElement e = parse_element(req_.element, *L_);
        const std::string name = e.to_string();
        const KernelTest k = in_kernel_of_norm(e, *L_, spec_.mode);
        if (text()) {
            out_ << "element: " << name << '\n' << "norm: " << to_string(norm(e, *L_)) << '\n';
            if (k.in_kernel)
                out_ << "ker N: yes, class " << k.kernel_class->to_string() << '\n';
            else
                out_ << "ker N: no, norm class " << k.witness->to_string() << '\n';
        }
        if (!k.in_kernel) {
            if (text())
                out_ << "verdict: ERROR not in ker N\n";
            else
                tsv_row(out_, name, "-", k.witness->to_string(), "ERROR not in ker N");
            code_ = std::max(code_, 1);
            return;
        }
        const UnramifiedTest u = is_S_unramified(e, *L_, S_);
        if (text()) {
            out_ << "checked places: " << join_places(u.checked) << '\n';
            if (u.unramified)
                out_ << "S-unramified: yes\n";
            else
                out_ << "S-unramified: no, at " << u.witness->place.to_string() << " valuations "
                     << join_valuations(u.witness->valuations) << '\n';
            if (L_->is_split())
                out_ << "split expansion: " << to_string(split_h_expansion(e, *L_)) << '\n';
        }
        const ResidueCertificate audit = verify_in_Br_C(*k.kernel_class, *L_);
        for (const auto& entry : audit.entries) {
            if (text())
                out_ << "Br C audit: " << entry.place << ": " << entry.residue.to_string() << " ("
                     << entry.note << ")\n";
            else
                tsv_row(out_, name, entry.place, entry.residue.to_string(),
                        entry.residue.is_identity() ? "unramified" : "ramified");
        }
        const FilterRow row = br_X_filter({e}, *L_, S_, spec_.mode).front();
        if (row.verdict == Verdict::error) {
            code_ = std::max(code_, exit_code_for(*row.error_kind));
            if (text())
                out_ << "verdict: ERROR " << to_string(*row.error_kind) << ": " << row.message << '\n';
            else
                tsv_row(out_, name, "-", "-", "ERROR " + row.message);
            return;
        }
        if (!text()) {
            if (row.verdict == Verdict::fail)
                tsv_row(out_, name, row.place->to_string(), row.residue->to_string(), "FAIL");
            else
                tsv_row(out_, name, "-", "-", "PASS");
            return;
        }
        if (row.verdict == Verdict::pass)
            out_ << "verdict: PASS (necessary condition for Br X holds)\n";
        else
            out_ << "verdict: FAIL at " << row.place->to_string() << ", residue "
                 << row.residue->to_string() << ", not a square in the fiber field\n";
    }

    void expand_split()
    {
        const EtaleElement e = parse_element(req_.element, *L_);
        const SymbolSum s = split_h_expansion(e, *L_);
        if (text())
            out_ << "element: " << e.to_string() << '\n' << "expansion: " << to_string(s) << '\n';
        else
            tsv_row(out_, e.to_string(), "-", to_string(s), "expansion");
    }

    void residues()
    {
        const EtaleElement e = parse_element(req_.element, *L_);
        const PlaceK t0 = parse_place(req_.place);
        const SquareClass r = vertical_residue_of_h(e, *L_, S_, t0, spec_.mode);
        const std::string verdict = r.is_identity() ? "identity" : "non-identity";
        if (!text()) {
            tsv_row(out_, e.to_string(), t0.to_string(), r.to_string(), verdict);
            return;
        }
        const auto& points = L_->local_points(t0);
        const auto vals = valuations_above(e, *L_, t0);
        std::vector<PointValuation> pv;
        for (std::size_t i = 0; i < points.size(); ++i)
            pv.push_back({to_string(points[i].residue_factor(), "x"), vals[i]});
        out_ << "element: " << e.to_string() << '\n'
             << "place: " << t0.to_string() << '\n'
             << "valuations: " << join_valuations(pv) << '\n'
             << "vertical residue: " << r.to_string() << " (" << verdict << ")\n";
        if (L_->is_split()) {
            const ResidueCertificate c =
                residue_profile(split_h_expansion(e, *L_), {t0}, *L_, spec_.mode);
            const SquareClass& s = c.entries.front().residue;
            out_ << "split expansion residue: " << s.to_string() << " ("
                 << (s == r ? "agrees" : "DISAGREES") << ")\n";
            if (s != r)
                code_ = std::max(code_, 1);
        }
    }

    const SurfaceSpec& spec_;
    const PipelineRequest& req_;
    EtaleAlgebraPtr L_;
    BadPlaceSet S_;
    std::ostringstream out_;
    std::ostringstream diag_;
    int code_ = 0;
};

} // namespace

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::unsupported_geometry:
        return 2;
    case ErrorKind::precision_cap:
        return 3;
    default:
        return 1;
    }
}

Report run_pipeline(const SurfaceSpec& spec, const PipelineRequest& request)
{
    try {
        return Run(spec, request).execute();
    } catch (const Error& err) {
        Report r;
        r.diagnostics = std::string("error: ") + to_string(err.kind()) + ": " + err.what() + '\n';
        r.exit_code = exit_code_for(err.kind());
        return r;
    }
}

} // namespace brauer2

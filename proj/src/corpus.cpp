#include "egth/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "egth/errors.hpp"

namespace egth::corpus {
namespace {

// ---------------------------------------------------------------------------
// Transition matrices (decimal literals, one string per row)
// ---------------------------------------------------------------------------

const std::vector<std::string> kTp1 = {
    ".1 .6  0 .3  0  0",
    ".5 .5  0  0  0  0",
    ".5 .2  0  0 .3  0",
    " 0 .7  0 .2  0 .1",
    ".1  0 .8  0  0 .1",
    ".4  0 .4  0  0 .2",
};

// Entry (3,3) is .0996: the row sums to 1 exactly, consistent with the
// published benchmark and with the reference stationary vector.
const std::vector<std::string> kTp2 = {
    ".85     0      .149    .0009   0      .00005  0      .00005",
    ".1      .65    .249    0       .0009  .00005  0      .00005",
    ".1      .8     .0996   .0003   0      0       .0001  0",
    "0       .0004  0       .7      .2995  0       .0001  0",
    ".0005   0      .0004   .399    .6     .0001   0      0",
    "0       .00005 0       0       .00005 .6      .2499  .15",
    ".00003  0      .00003  .00004  0      .1      .8     .0999",
    "0       .00005 0       0       .00005 .1999   .25    .55",
};

const std::vector<std::string> kTp3 = {
    "0.999999  1.0E-07  2.0E-07   3.0E-07   4.0E-07",
    "0.4       0.3      0         0         0.3",
    "5.0E-07   0        0.999999  0         5.0E-07",
    "5.0E-07   0        0         0.999999  5.0E-07",
    "2.0E-07   3.0E-07  1.0E-07   4.0E-07   0.999999",
};

// TP4 family template; entries (1,1), (1,6), (6,1), (6,6) depend on epsilon.
const std::vector<std::string> kTp4Template = {
    "?  .3 .1 .2 .3  ?  0  0  0  0",
    ".2 .1 .1 .2 .4  0  0  0  0  0",
    ".1 .2 .2 .4 .1  0  0  0  0  0",
    ".4 .2 .1 .2 .1  0  0  0  0  0",
    ".6 .3  0  0 .1  0  0  0  0  0",
    " ?  0  0  0  0  ? .2 .2 .4 .1",
    " 0  0  0  0  0 .2 .2 .1 .3 .2",
    " 0  0  0  0  0 .1 .5  0 .2 .2",
    " 0  0  0  0  0 .5 .2 .1  0 .2",
    " 0  0  0  0  0 .1 .2 .2 .3 .2",
};

const std::vector<std::string> kTp1Original = {
    ".2  0  0 .6  0  0  0  0  0 .2",
    " 0 .1  0  0 .6  0 .3  0  0  0",
    " 0 .1  0  0  0  0  0 .8  0 .1",
    " 0  0 .6  0 .3  0  0  0  0 .1",
    " 0 .5  0  0 .5  0  0  0  0  0",
    " 0 .5  0  0 .2  0  0  0 .3  0",
    " 0  0  0  0 .7  0 .2  0  0 .1",
    ".1  0 .9  0  0  0  0  0  0  0",
    " 0 .1  0  0  0 .8  0  0  0 .1",
    " 0 .4  0  0  0 .4  0  0  0 .2",
};

// ---------------------------------------------------------------------------
// Reference passage-time matrices, as displayed: mantissas under the scale
// ---------------------------------------------------------------------------

const std::vector<std::string> kGoldenM_Tp1 = {
    "0.031906040268456  0.016777874480224  1.678333333333333  0.073333333333333  5.641111111111115  0.826666666666667",
    "0.020000000000000  0.018388937240112  1.698333333333333  0.093333333333333  5.661111111111114  0.846666666666667",
    "0.023322147651007  0.030226767237211  1.267733333333333  0.096655480984340  3.962777777777780  0.816403508771930",
    "0.033020134228188  0.017000290107340  1.605000000000000  0.085082774049217  5.567777777777780  0.753333333333333",
    "0.031073825503356  0.039459433323663  0.263000000000000  0.104407158836689  4.225777777777779  0.745789473684211",
    "0.024161073825503  0.036002320858718  0.851666666666667  0.097494407158837  4.814444444444444  0.667228070175439",
};

const std::vector<std::string> kGoldenM_Tp2 = {
    "0.001120038405164  0.004000524241398  0.003226904694844  0.239882165430405  0.239916492340981  1.000922840539885  1.000490838593494  1.001389537679506",
    "0.004417409689462  0.001078078341468  0.002304381884289  0.239935793021461  0.239962993464962  1.000922873212188  1.000490815512089  1.001389562022972",
    "0.004262490336574  0.000781374666630  0.002469848581477  0.240060202302811  0.240088526508469  1.000922957110259  1.000490756645686  1.001389623432740",
    "0.301513515251386  0.300259753492525  0.300637382978007  0.000630782736933  0.001031137061417  1.000929150415075  1.000470049184145  1.001438797333724",
    "0.301297906906960  0.300048436220740  0.300423478300436  0.001073299587587  0.000840772722264  1.000928904046822  1.000470178394119  1.001438736100158",
    "1.135651813460504  1.134200327913156  1.134620596021624  1.133546713985028  1.133553779847362  0.000830664952960  0.000800112187562  0.001636856945469",
    "1.135644929057248  1.134193996457640  1.134613896678193  1.133551932417630  1.133559210389771  0.001692132143070  0.000359977354250  0.001819133106368",
    "1.135651812313103  1.134200326857913  1.134620594905067  1.133546714854767  1.133553780752453  0.001384723610290  0.000799978835531  0.000982132394897",
};

const std::vector<std::string> kGoldenM_Tp3 = {
    "0.000000317241441  0.7777777777777778  0.879704977859779  0.341448457627119  0.216494865979381",
    "0.103448448275862  0.5111112111111111  0.912915468634687  0.327581118644068  0.123711494845361",
    "0.220689689655172  0.8222222222222222  0.000001018450384  0.425269728813559  0.208247432989691",
    "0.220689689655172  0.8222222222222222  1.018450383763838  0.000000425269729  0.208247432989691",
    "0.241379379310345  0.6666666666666667  0.957195789667897  0.309091000000000  0.000000284536138",
};

const std::vector<std::string> kGoldenM_Tp41 = {
    "8.045951577090367  12.495886427122791  35.422216573462130  17.601173529910184  11.856207127752848  34.786324786324791  45.246329587753088  49.815688742069113  42.594762594762599  49.286887212516078",
    "3.076923076923078  10.122326177629816  31.602609727164882  13.781566683612947  7.062090618391871  37.863247863247864  48.323252664676161  52.892611818992194  45.671685671685680  52.363810289439151",
    "3.658119658119659  8.886694983354381  26.896466700559230  9.075423657007287  9.567319098457888  38.444444444444450  48.904449245872748  53.473808400188773  46.252882252882266  52.945006870635730",
    "2.743589743589744  9.788992844296484  31.269276393831554  13.448233350279617  10.139541105781630  37.529914529914535  47.989919331342840  52.559278485658872  45.338352338352358  52.030476956105836",
    "2.136752136752137  9.441702062526305  35.260125402474159  17.439082358922217  10.232351462169268  36.923076923076927  47.383081724505232  51.952440878821257  44.731514731514736  51.423639349268221",
    "45.673190984578881  58.169077411701679  81.095407558041003  63.274364514489051  57.529398112331720  8.045951577090367  10.460004801428308  15.029363955744323  7.808437808437810  14.500562426191298",
    "49.913997627520750  62.409884054643548  85.336214200982880  67.515171157430927  61.770204755273589  4.240806642941873  7.398677043345709  12.853154003460752  5.064225064225065  10.352225244678761",
    "50.388493475682083  62.884379902804881  85.810710049144220  67.989667005592253  62.244700603434922  4.715302491103203  5.038329848801624  13.870628178910389  5.275135275135275  9.888075629964071",
    "48.935349940688013  61.431236367810811  84.357566514150150  66.536523470598183  60.791557068440852  3.262158956109134  8.105137295210925  13.355356300141578  7.406756406756408  11.309533825027810",
    "50.385527876631073  62.881414303753871  85.807744450093210  67.986701406541243  62.241735004383912  4.712336892052194  6.856509548083042  11.350217607886318  4.810894810894811  9.890976565056040",
};

const std::vector<std::string> kGoldenM_Tp42 = {
    "0.008045951577090  0.012495886427123  0.035422216573462  0.017601173529910  0.011856207127753  3.478632478632480  3.489092483433907  3.493661842588224  3.486440916440916  3.493133041058670",
    "0.003076923076923  0.010122326177630  0.031602609727165  0.013781566683613  0.007062090618392  3.481709401709403  3.492169406510831  3.496738765665147  3.489517839517839  3.496209964135593",
    "0.003658119658120  0.008886694983354  0.026896466700559  0.009075423657007  0.009567319098458  3.482290598290600  3.492750603092027  3.497319962246344  3.490099036099036  3.496791160716790",
    "0.002743589743590  0.009788992844296  0.031269276393832  0.013448233350280  0.010139541105782  3.481376068376070  3.491836073177498  3.496405432331814  3.489184506184507  3.495876630802261",
    "0.002136752136752  0.009441702062526  0.035260125402474  0.017439082358922  0.010232351462169  3.480769230769232  3.491229235570660  3.495798594724976  3.488577668577669  3.495269793195423",
    "4.567319098457888  4.579814984885012  4.602741315031350  4.584920271987799  4.579175305585641  0.008045951577090  0.010460004801428  0.015029363955744  0.007808437808438  0.014500562426191",
    "4.571559905100830  4.584055791527955  4.606982121674293  4.589161078630741  4.583416112228583  0.004240806642942  0.007398677043346  0.012853154003461  0.005064225064225  0.010352225244679",
    "4.572034400948992  4.584530287376116  4.607456617522455  4.589635574478902  4.583890608076744  0.004715302491103  0.005038329848802  0.013870628178910  0.005275135275135  0.009888075629964",
    "4.570581257413997  4.583077143841122  4.606003473987461  4.588182430943907  4.582437464541750  0.003262158956109  0.008105137295211  0.013355356300142  0.007406756406756  0.011309533825028",
    "4.572031435349941  4.584527321777063  4.607453651923404  4.589632608879850  4.583887642477694  0.004712336892052  0.006856509548083  0.011350217607886  0.004810894810895  0.009890976565056",
};

const std::vector<std::string> kGoldenM_Tp43 = {
    "0.000080459515771  0.000124958864271  0.000354222165735  0.000176011735299  0.000118562071278  3.478632478632479  3.478737078680493  3.478782772272036  3.478710563010563  3.478777484256741",
    "0.000030769230769  0.000101223261776  0.000316026097272  0.000137815666836  0.000070620906184  3.478663247863248  3.478767847911262  3.478813541502805  3.478741332241332  3.478808253487510",
    "0.000036581196581  0.000088866949834  0.000268964667006  0.000090754236570  0.000095673190985  3.478669059829060  3.478773659877075  3.478819353468617  3.478747144207145  3.478814065453322",
    "0.000027435897436  0.000097889928443  0.000312692763938  0.000134482333503  0.000101395411058  3.478659914529916  3.478764514577929  3.478810208169472  3.478737998908000  3.478804920154177",
    "0.000021367521368  0.000094417020625  0.000352601254025  0.000174390823589  0.000102323514622  3.478653846153847  3.478758446201860  3.478804139793404  3.478731930531930  3.478798851778109",
    "4.567319098457888  4.567444057322159  4.567673320623622  4.567495110193187  4.567437660529166  0.000080459515771  0.000104600048014  0.000150293639557  0.000078084378084  0.000145005624262",
    "4.567361506524317  4.567486465388588  4.567715728690051  4.567537518259616  4.567480068595595  0.000042408066429  0.000073986770433  0.000128531540035  0.000050642250642  0.000103522252447",
    "4.567366251482798  4.567491210347070  4.567720473648532  4.567542263218098  4.567484813554076  0.000047153024911  0.000050383298488  0.000138706281789  0.000052751352751  0.000098880756300",
    "4.567351720047449  4.567476678911720  4.567705942213183  4.567527731782747  4.567470282118726  0.000032621589561  0.000081051372952  0.000133553563001  0.000074067564068  0.000113095338250",
    "4.567366221826807  4.567491180691079  4.567720443992542  4.567542233562107  4.567484783898085  0.000047123368921  0.000068565095481  0.000113502176079  0.000048108948109  0.000098909765651",
};

const std::vector<std::string> kGoldenM_Tp44 = {
    "0.000000804595158  0.000001249588643  0.000003542221657  0.000001760117353  0.000001185620713  3.478632478632480  3.478633524632959  3.478633981568875  3.478633259476260  3.478633928688722",
    "0.000000307692308  0.000001012232618  0.000003160260973  0.000001378156668  0.000000706209062  3.478632786324787  3.478633832325267  3.478634289261183  3.478633567168568  3.478634236381030",
    "0.000000365811966  0.000000888669498  0.000002689646670  0.000000907542366  0.000000956731910  3.478632844444446  3.478633890444925  3.478634347380841  3.478633625288226  3.478634294500688",
    "0.000000274358974  0.000000978899284  0.000003126927639  0.000001344823335  0.000001013954111  3.478632752991454  3.478633798991934  3.478634255927850  3.478633533835235  3.478634203047697",
    "0.000000213675214  0.000000944170206  0.000003526012540  0.000001743908236  0.000001023235146  3.478632692307694  3.478633738308173  3.478634195244089  3.478633473151474  3.478634142363936",
    "4.567319098457888  4.567320348046532  4.567322640679545  4.567320858575242  4.567320284078601  0.000000804595158  0.000001046000480  0.000001502936396  0.000000780843781  0.000001450056243",
    "4.567319522538552  4.567320772127196  4.567323064760209  4.567321282655906  4.567320708159265  0.000000424080664  0.000000739867704  0.000001285315400  0.000000506422506  0.000001035222524",
    "4.567319569988138  4.567320819576780  4.567323112209794  4.567321330105491  4.567320755608850  0.000000471530249  0.000000503832985  0.000001387062818  0.000000527513528  0.000000988807563",
    "4.567319424673784  4.567320674262427  4.567322966895441  4.567321184791138  4.567320610294496  0.000000326215896  0.000000810513730  0.000001335535630  0.000000740675641  0.000001130953383",
    "4.567319569691578  4.567320819280220  4.567323111913234  4.567321329808930  4.567320755312290  0.000000471233689  0.000000685650955  0.000001135021761  0.000000481089481  0.000000989097657",
};

// ---------------------------------------------------------------------------
// Reference stationary vectors. TP1 carries 15 significant digits, TP2 and
// TP3 carry 14. The TP4 family shares one vector; the published display of
// it is truncated, so it is reconstructed as the reciprocal diagonal of the
// TP41 reference matrix (exact for a chain), written out to full binary64
// precision.
// ---------------------------------------------------------------------------

const std::string kGoldenPi_Tp1 =
    "0.313420277660917 0.543805216659655 0.007888094236432 0.117532604122844 "
    "0.002366428270930 0.014987379049222";
const std::string kGoldenPi_Tp2 =
    "0.08928265275450 0.09275763750513 0.04048831201636 0.15853319081983 "
    "0.11893820690418 0.12038548110605 0.27779525244927 0.10181926644467";
const std::string kGoldenPi_Tp3 =
    "0.31521732963139 0.00000019565214 0.09818838658633 0.23514488152962 0.35144920660052";
const std::string kGoldenPi_Tp4 =
    "0.12428610717063586 0.09879152108435159 0.03717960470916457 0.07435920941832913 "
    "0.09772924666408978 0.12428610717063586 0.1351592986342591 0.07209478814524428 "
    "0.1350118655296676 0.10110225147362224";

double parse_literal(const std::string& tok) {
    double v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ValidationError("bad corpus literal '" + tok + "'");
    return v;
}

std::vector<double> parse_row(const std::string& line) {
    std::istringstream in(line);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_literal(tok));
    return out;
}

DenseMatrix<double> parse_matrix(const std::vector<std::string>& rows) {
    const Index n = static_cast<Index>(rows.size());
    DenseMatrix<double> m(n, n);
    for (Index i = 0; i < n; ++i) {
        const std::vector<double> r = parse_row(rows[static_cast<size_t>(i)]);
        if (static_cast<Index>(r.size()) != n)
            throw ValidationError("corpus row has wrong length");
        for (Index j = 0; j < n; ++j) m(i, j) = r[static_cast<size_t>(j)];
    }
    return m;
}

DenseVector<double> parse_vector(const std::string& line) {
    const std::vector<double> r = parse_row(line);
    DenseVector<double> v(static_cast<Index>(r.size()));
    for (Index i = 0; i < v.size(); ++i) v(i) = r[static_cast<size_t>(i)];
    return v;
}

DenseMatrix<double> tp4_matrix(double eps) {
    std::vector<std::string> rows = kTp4Template;
    DenseMatrix<double> m(10, 10);
    for (Index i = 0; i < 10; ++i) {
        std::istringstream in(rows[static_cast<size_t>(i)]);
        std::string tok;
        for (Index j = 0; j < 10; ++j) {
            in >> tok;
            if (tok == "?")
                m(i, j) = (i == j) ? 0.1 - eps : eps;
            else
                m(i, j) = parse_literal(tok);
        }
    }
    return m;
}

MfptMatrix<double> scaled_golden(const std::vector<std::string>& rows, double scale) {
    DenseMatrix<double> m = parse_matrix(rows);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * scale;
    return MfptMatrix<double>::from(std::move(m));
}

TestProblem make(const std::string& id) {
    if (id == "TP1")
        return TestProblem{id, StochasticMatrix<double>::validate(parse_matrix(kTp1)),
                           StationaryDistribution<double>::from_reference(parse_vector(kGoldenPi_Tp1), 1e-12),
                           scaled_golden(kGoldenM_Tp1, 1e2), 1e2};
    if (id == "TP2")
        return TestProblem{id, StochasticMatrix<double>::validate(parse_matrix(kTp2)),
                           StationaryDistribution<double>::from_reference(parse_vector(kGoldenPi_Tp2), 1e-12),
                           scaled_golden(kGoldenM_Tp2, 1e4), 1e4};
    if (id == "TP3")
        return TestProblem{id, StochasticMatrix<double>::validate(parse_matrix(kTp3)),
                           StationaryDistribution<double>::from_reference(parse_vector(kGoldenPi_Tp3), 1e-12),
                           scaled_golden(kGoldenM_Tp3, 1e7), 1e7};
    if (id == "TP41" || id == "TP42" || id == "TP43" || id == "TP44") {
        const double eps = id == "TP41" ? 1e-1 : id == "TP42" ? 1e-3 : id == "TP43" ? 1e-5 : 1e-7;
        const double scale = id == "TP41" ? 1.0 : id == "TP42" ? 1e3 : id == "TP43" ? 1e5 : 1e7;
        const auto& rows = id == "TP41"   ? kGoldenM_Tp41
                           : id == "TP42" ? kGoldenM_Tp42
                           : id == "TP43" ? kGoldenM_Tp43
                                          : kGoldenM_Tp44;
        return TestProblem{id, StochasticMatrix<double>::validate(tp4_matrix(eps)),
                           StationaryDistribution<double>::from_reference(parse_vector(kGoldenPi_Tp4), 1e-12),
                           scaled_golden(rows, scale), scale};
    }
    if (id == "TP1_original")
        return TestProblem{id, StochasticMatrix<double>::validate(parse_matrix(kTp1Original)),
                           std::nullopt, std::nullopt, 1.0};
    throw UnknownProblem(id);
}

}  // namespace

const std::vector<std::string>& ids() {
    static const std::vector<std::string> kIds = {"TP1",  "TP2",  "TP3",  "TP41",
                                                  "TP42", "TP43", "TP44", "TP1_original"};
    return kIds;
}

bool is_known(const std::string& id) {
    const auto& all = ids();
    return std::find(all.begin(), all.end(), id) != all.end();
}

TestProblem load(const std::string& id) { return make(id); }

MfptMatrix<double> golden_mfpt(const std::string& id) {
    TestProblem tp = load(id);
    if (!tp.golden_m) throw UnknownProblem(id + " has no reference passage-time matrix");
    return *std::move(tp.golden_m);
}

double golden_pi_abs_tol(const std::string& id) {
    if (!is_known(id)) throw UnknownProblem(id);
    return (id == "TP2" || id == "TP3") ? 1e-13 : 1e-10;
}

double golden_mfpt_excess(const MfptMatrix<double>& computed, const TestProblem& tp) {
    if (!tp.golden_m) throw UnknownProblem(tp.id + " has no reference passage-time matrix");
    const auto& g = *tp.golden_m;
    if (computed.size() != g.size())
        throw DimensionMismatch("computed matrix size " + std::to_string(computed.size()) +
                                " vs reference size " + std::to_string(g.size()));
    double worst = 0;
    for (Index i = 0; i < g.size(); ++i)
        for (Index j = 0; j < g.size(); ++j) {
            const double allowed = 1e-9 * std::fabs(g(i, j)) + 1e-15 * tp.scale;
            const double err = std::fabs(computed(i, j) - g(i, j));
            worst = std::max(worst, err / allowed);
        }
    return worst;
}

}  // namespace egth::corpus

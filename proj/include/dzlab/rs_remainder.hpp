#pragma once

// Polynomial fits (degree 47, coefficients highest first) of the
// Riemann-Siegel remainder shape function
//   Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
// and its 2nd, 3rd and 6th derivatives on [0, 1].  Psi is entire, so the
// fits converge to full double precision and no special handling is needed
// at the removable points p = 1/4, 3/4.

namespace dzlab::detail {

static constexpr double rs_psi_poly[48] = {
    -3.741062183706493164e-21, -3.734137196492881755e-8, 8.588515551943847925e-7, -9.637733723982329740e-6,
    0.00007031963532049513906, -0.0003744343480234812278, 0.001545502441633431195, -0.005117023966124664609,
    0.01383627003040725373, -0.03068135194407934329, 0.05505439998871515046, -0.07618896332303807310,
    0.06884394889674525597, -0.002770170479997326199, -0.1233961594846044687, 0.2329514521629977426,
    -0.1545868709812654519, -0.2866015528243504863, 1.040304967654063202, -1.587250510843735754,
    0.9896350461772374157, 1.461193040595552124, -5.125231670506122381, 7.301834670588375864,
    -4.223663442060665812, -5.776476332502782189, 18.66310837559447712, -24.41467812101222364,
    12.91988978686790275, 16.09516534761453576, -47.15341933081992542, 55.65879110671487139,
    -26.42797981722851071, -29.35406169281961830, 76.12414335928800229, -78.95180433082270592,
    32.59224142514225965, 31.22897689197715900, -68.95517415636011926, 59.99617699122903065,
    -20.33673481254510321, -15.82078451317170193, 27.76813919771280599, -18.23665100029954990,
    4.831732974255695934, 2.404470919537385083, -2.404470919537385083, 0.9238795325112867561,
};
static constexpr double rs_psi2_poly[48] = {
    -2.816384549620548627e-20, 3.197321235792525988e-6, -0.00007353838842322040369, 0.0007412071637620722326,
    -0.004172723512934543415, 0.01230447919358453941, 0.004372419527463865352, -0.2490890699448613152,
    1.480323439349960083, -5.617167928380406884, 15.97104196052992600, -35.62757917848484506,
    62.48891229211650359, -82.25590351025327504, 66.55252996694333647, 12.13572519650219611,
    -143.7553703318204329, 241.6730839039484951, -151.2136046196323382, -244.6516654246111877,
    842.0789456756422971, -1198.620602514701316, 694.1151862318433010, 950.0231218928956710,
    -3075.229259646882854, 4030.642167448592752, -2137.182272339718808, -2668.729840863818048,
    7838.505004334162694, -9277.577580973517052, 4418.602288142238540, 4925.120599382063738,
    -12825.73005840147160, 13358.10986566212693, -5549.875761623262974, -5342.439228092698899,
    11875.36636404889258, -10421.63817166859490, 3585.146556765648442, 2810.607920277944315,
    -4964.772539257928587, 3359.785911508825716, -854.1428621268943348, -474.6235353951510580,
    555.3627839542561198, -218.8398120035945988, 28.99039784553417560, 4.808941839074770166,
};
static constexpr double rs_psi3_poly[48] = {
    0.0002120910535586633227, -0.004984139758628588096, 0.05685498822167024895, -0.4194731266241491537,
    2.246884721893427401, -9.282320106694710901, 30.60710638498949929, -82.00226909395437418,
    179.1492442473117969, -314.3385310406662665, 419.5098803177697449, -348.3751787737053101,
    -58.12133357409664962, 777.0685719395291425, -1355.917945735886604, 885.2656017496852076,
    1453.534822025072666, -5230.945354096518893, 7754.977757562664994, -4680.382664821658103,
    -6695.266381560770012, 22663.06607051288579, -31133.21145092790163, 17341.13739164810669,
    22804.55079409540752, -70731.48982051124946, 88674.45866312627531, -44880.90793839320932,
    -53374.57954175071160, 148931.5917878808305, -166996.3959034003317, 75116.23881659734845,
    78801.92960066140431, -192385.9508772018703, 187013.5381193834060, -72148.38490111176044,
    -64109.27073711173795, 130629.0300045377808, -104216.3817166859473, 32266.31901089083591,
    22484.86336222355452, -34753.40777480550011, 20158.71546905295430, -4270.714310634471674,
    -1898.494141580604232, 1666.088351862768359, -437.6796240071891976, 28.99039784553417560,
};
static constexpr double rs_psi6_poly[48] = {
    5.363186746561628600e-17, 0.6746958776397427851, -15.51800518571409871, 193.4567364597663578,
    -1695.577346472032974, 11308.92798063302075, -59373.26970410157208, 250683.1056267718087,
    -864948.5182464713211, 2466288.862013824407, -5841964.775524466335, 11459375.13821730034,
    -18291257.16674071421, 22601914.17626424968, -18364484.41294184908, 1168013.946310195675,
    24816946.75334799039, -41926636.21703522043, 24587183.65166854350, 40328449.94826618895,
    -128073807.3696856882, 170354881.3021281708, -92152957.73572421850, -117437168.6682035959,
    353519603.8298581208, -429630191.3781345698, 210588331.9800964262, 242321811.6268749963,
    -653559122.5946555007, 707622213.4390618727, -306985416.5716031772, -310319804.4134635523,
    729169073.2414114124, -681345295.2665048403, 252390562.4216268793, 215129267.8100092253,
    -420170916.7158254080, 320915231.4128630567, -95235868.06946758841, -63468178.02974061755,
    94052901.60326720206, -52525056.38520971741, 10841483.18765932087, 4721821.306066946450,
    -4170408.932976660013, 1209522.928143177258, -102497.1434552273202, -11390.96484948362539,
};

template <int N>
inline double rs_polyval(const double (&coeffs)[N], double p) {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc = acc * p + coeffs[i];
    return acc;
}

inline double rs_psi(double p)  { return rs_polyval(rs_psi_poly, p); }
inline double rs_psi2(double p) { return rs_polyval(rs_psi2_poly, p); }
inline double rs_psi3(double p) { return rs_polyval(rs_psi3_poly, p); }
inline double rs_psi6(double p) { return rs_polyval(rs_psi6_poly, p); }

}  // namespace dzlab::detail

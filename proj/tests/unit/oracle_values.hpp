// Generated by tests/oracles/generate.py (mpmath, 50 digits). Do not edit.
#pragma once

#include <vector>

namespace oracle {

struct LnGammaRow {
    double x;
    double value;
};
inline const std::vector<LnGammaRow> lngamma_rows{
    {1.0e-2, 4.5994798780420217225},
    {1.0e-1, 2.2527126517342059599},
    {5.0e-1, 5.7236494292470008707e-1},
    {1.0, 0.0},
    {1.5, -1.2078223763524522235e-1},
    {2.5, 2.8468287047291915963e-1},
    {7.3, 7.1478925230222490328},
    {1.99e+1, 3.9043088581236210447e+1},
    {2.01e+1, 3.9637192503636938403e+1},
    {5.5e+1, 1.6432011226319518141e+2},
    {1.5e+2, 6.0000947055532742811e+2},
};

struct GammaRow {
    double x;
    double value;
};
inline const std::vector<GammaRow> gamma_rows{
    {1.0e-2, 9.9432585119150603714e+1},
    {1.0e-1, 9.5135076986687318363},
    {5.0e-1, 1.7724538509055160273},
    {1.0, 1.0},
    {1.5, 8.8622692545275801365e-1},
    {2.5, 1.3293403881791370205},
    {7.3, 1.2714236336639092731e+3},
    {1.99e+1, 9.0406140079547899527e+16},
    {2.01e+1, 1.6376232006547293005e+17},
    {5.5e+1, 2.3084369733924138047e+71},
};

struct PsiRow {
    int n;
    double x;
    double value;
};
inline const std::vector<PsiRow> psi_rows{
    {0, 1.0e-2, -1.005608854578686745e+2},
    {0, 1.0e-1, -1.0423754940411076795e+1},
    {0, 5.0e-1, -1.9635100260214234794},
    {0, 1.0, -5.7721566490153286061e-1},
    {0, 1.5, 3.6489973978576520559e-2},
    {0, 2.5, 7.0315664064524318723e-1},
    {0, 7.3, 1.9178203356379860984},
    {0, 1.99e+1, 2.9653837242676786488},
    {0, 2.01e+1, 2.9756379786475404569},
    {0, 5.5e+1, 3.998214728842736735},
    {0, 1.5e+2, 5.00729825707567927},
    {1, 1.0e-2, 1.000162121352831322e+4},
    {1, 1.0e-1, 1.0143329915079275882e+2},
    {1, 5.0e-1, 4.9348022005446793094},
    {1, 1.0, 1.6449340668482264365},
    {1, 1.5, 9.3480220054467930942e-1},
    {1, 2.5, 4.9035775610023486497e-1},
    {1, 7.3, 1.4679576813142709816e-1},
    {1, 1.99e+1, 5.1534988983070662843e-2},
    {1, 2.01e+1, 5.1009350700253045742e-2},
    {1, 5.5e+1, 1.8348109124868421775e-2},
    {1, 1.5e+2, 6.6889382711659947299e-3},
    {2, 1.0e-2, -2.0000023403986770845e+6},
    {2, 1.0e-1, -2.0018614573783440063e+3},
    {2, 5.0e-1, -1.6828796644234319996e+1},
    {2, 1.0, -2.4041138063191885708},
    {2, 1.5, -8.287966442343199956e-1},
    {2, 2.5, -2.36204051641727403e-1},
    {2, 7.3, -2.1510814441620250919e-2},
    {2, 1.99e+1, -2.6552682774901059155e-3},
    {2, 2.01e+1, -2.6013906050221929297e-3},
    {2, 5.5e+1, -3.366436658612700369e-4},
    {2, 1.5e+2, -4.4741728380430462784e-5},
    {3, 1.0e-2, 6.0000000625106187288e+8},
    {3, 1.0e-1, 6.0004512876790266707e+4},
    {3, 5.0e-1, 9.7409091034002437236e+1},
    {3, 1.0, 6.4939394022668291491},
    {3, 1.5, 1.4090910340024372364},
    {3, 2.5, 2.2390584881725205126e-1},
    {3, 7.3, 6.2931587131984892218e-3},
    {3, 1.99e+1, 2.7355760534575210008e-4},
    {3, 2.01e+1, 2.65275685558155886e-4},
    {3, 5.5e+1, 1.2352856512914967568e-5},
    {3, 1.5e+2, 5.9854485538183623423e-7},
    {4, 1.0e-2, -2.4000000002370092813e+11},
    {4, 1.0e-1, -2.4000156072031958649e+6},
    {4, 5.0e-1, -7.7147424982666722519e+2},
    {4, 1.0, -2.4886266123440878232e+1},
    {4, 1.5, -3.4742498266672251905},
    {4, 2.5, -3.1375599950673136338e-1},
    {4, 7.3, -2.7568956193746710644e-3},
    {4, 1.99e+1, -4.2265379634543219847e-5},
    {4, 2.01e+1, -4.0568303885127172563e-5},
    {4, 5.5e+1, -6.7989747572038385359e-7},
    {4, 1.5e+2, -1.2010754430851036681e-8},
    {5, 1.0e-2, 1.200000000001150675e+14},
    {5, 1.0e-1, 1.2000006930751096897e+8},
    {5, 5.0e-1, 7.6911135486024354962e+3},
    {5, 1.0, 1.2208116743813389677e+2},
    {5, 1.5, 1.1113548602435496242e+1},
    {5, 2.5, 5.7856917856718348455e-1},
    {5, 7.3, 1.6075721226681496716e-3},
    {5, 1.99e+1, 8.7049045959240324919e-6},
    {5, 2.01e+1, 8.2703033884186890589e-6},
    {5, 5.5e+1, 4.9893735894707182553e-8},
    {5, 1.5e+2, 3.213519875695132991e-10},
    {6, 1.0e-2, -7.2000000000000677367e+16},
    {6, 1.0e-1, -7.2000003737818056385e+9},
    {6, 5.0e-1, -9.2203457923803023286e+4},
    {6, 1.0, -7.2601147971498443532e+2},
    {6, 1.5, -4.3457923803023286231e+1},
    {6, 2.5, -1.3180061075500352023},
    {6, 7.3, -1.1697759403034587405e-3},
    {6, 1.99e+1, -2.2405673699189470965e-6},
    {6, 2.01e+1, -2.1070396039499080759e-6},
    {6, 5.5e+1, -4.5766369429927708215e-9},
    {6, 1.5e+2, -1.0747317699531586353e-11},
};

struct LnQGammaRow {
    double q;
    double x;
    double value;
};
inline const std::vector<LnQGammaRow> lnqgamma_rows{
    {1.0e-1, 5.0e-2, 2.1053901272663684013},
    {1.0e-1, 5.0e-1, 2.4657995917970810693e-1},
    {1.0e-1, 1.0, 0.0},
    {1.0e-1, 2.7, 6.480938003584246283e-2},
    {1.0e-1, 9.0, 7.263616583668603919e-1},
    {1.0e-1, 3.0e+1, 2.9389324860701016061},
    {5.0e-1, 5.0e-2, 2.6669505425452490975},
    {5.0e-1, 5.0e-1, 4.5236951172055617771e-1},
    {5.0e-1, 1.0, 0.0},
    {5.0e-1, 2.7, 2.6142135112808835135e-1},
    {5.0e-1, 9.0, 4.3070241456408607519},
    {5.0e-1, 3.0e+1, 1.8859206143288644177e+1},
    {9.0e-1, 5.0e-2, 2.9205267754086753694},
    {9.0e-1, 5.0e-1, 5.5284109231251403205e-1},
    {9.0e-1, 1.0, 0.0},
    {9.0e-1, 2.7, 4.042460885092620536e-1},
    {9.0e-1, 9.0, 9.2198408693365491214},
    {9.0e-1, 3.0e+1, 5.3639782873341777113e+1},
    {9.9e-1, 5.0e-2, 2.9642286675261824427},
    {9.9e-1, 5.0e-1, 5.7048260930978824199e-1},
    {9.9e-1, 1.0, 0.0},
    {9.9e-1, 2.7, 4.3183759043974589633e-1},
    {9.9e-1, 9.0, 1.0464723078632145546e+1},
    {9.9e-1, 3.0e+1, 6.9252688526626862039e+1},
    {2.0, 5.0e-2, 3.3089781185388984403},
    {2.0, 5.0e-1, 7.1229970443053566874e-1},
    {2.0, 1.0, 0.0},
    {2.0, 2.7, 6.7384392356125581046e-1},
    {2.0, 9.0, 2.3715145201319329416e+1},
    {2.0, 3.0e+1, 3.002769614506264398e+2},
    {3.5, 5.0e-2, 3.61086226209356408},
    {3.5, 5.0e-1, 8.3953687991779515129e-1},
    {3.5, 1.0, 0.0},
    {3.5, 2.7, 9.1100415778168737836e-1},
    {3.5, 9.0, 3.7314575088657816054e+1},
    {3.5, 3.0e+1, 5.1792487638589252693e+2},
};

struct QPsiRow {
    int n;
    double q;
    double x;
    double value;
};
inline const std::vector<QPsiRow> qpsi_rows{
    {0, 3.0e-1, 2.0e-1, -4.565733857083478842},
    {0, 3.0e-1, 1.0, -3.2581610473710257146e-1},
    {0, 3.0e-1, 4.5, 3.4901809557075382362e-1},
    {0, 8.0e-1, 2.0e-1, -5.1460566001570068239},
    {0, 8.0e-1, 1.0, -5.2315781331192765803e-1},
    {0, 8.0e-1, 4.5, 1.0848932340509732895},
    {0, 2.0, 2.0e-1, -5.7593908109692433206},
    {0, 2.0, 1.0, -7.6710262463601843449e-1},
    {0, 2.0, 4.5, 2.7094461935731628062},
    {1, 3.0e-1, 2.0e-1, 2.5629009477880361997e+1},
    {1, 3.0e-1, 1.0, 1.1033456027498840034},
    {1, 3.0e-1, 4.5, 9.2502523982997059898e-3},
    {1, 8.0e-1, 2.0e-1, 2.6154560438267727607e+1},
    {1, 8.0e-1, 1.0, 1.535437001378334782},
    {1, 8.0e-1, 4.5, 1.5353795797752731005e-1},
    {1, 2.0, 2.0e-1, 2.660192399338031915e+1},
    {1, 2.0, 1.0, 2.0115265327081241505},
    {1, 2.0, 4.5, 7.3826643572142362028e-1},
    {2, 3.0e-1, 2.0e-1, -2.5135730268974494252e+2},
    {2, 3.0e-1, 1.0, -2.2847945345769782784},
    {2, 3.0e-1, 4.5, -1.1213497379749329656e-2},
    {2, 8.0e-1, 2.0e-1, -2.5147388676309036688e+2},
    {2, 8.0e-1, 1.0, -2.3999661083949690471},
    {2, 8.0e-1, 4.5, -5.7566898405952530757e-2},
    {2, 2.0, 2.0e-1, -2.5143800491935487492e+2},
    {2, 2.0, 1.0, -2.3642369760703093071},
    {2, 2.0, 4.5, -3.3223401229765137133e-2},
    {3, 3.0e-1, 2.0e-1, 3.753250348446897689e+3},
    {3, 3.0e-1, 1.0, 6.4851844160618200771},
    {3, 3.0e-1, 4.5, 1.368597281408403036e-2},
    {3, 8.0e-1, 2.0e-1, 3.7532450010670182282e+3},
    {3, 8.0e-1, 1.0, 6.4939290716531629259},
    {3, 8.0e-1, 4.5, 3.0244806809707996058e-2},
    {3, 2.0, 2.0e-1, 3.7532455755180837276e+3},
    {3, 2.0, 1.0, 6.4929775893560663014},
    {3, 2.0, 4.5, 2.5892564262669524197e-2},
};

struct LogMeanRow {
    double r;
    double a;
    double b;
    double value;
};
inline const std::vector<LogMeanRow> logmean_rows{
    {-2.0, 1.0, 2.0, 1.3867225487012694097},
    {-2.0, 3.0e-1, 7.0, 1.0650792121006224551},
    {-2.0, 5.0, 5.001, 5.0004999666699996112},
    {-1.0, 1.0, 2.0, 1.4142135623730950488},
    {-1.0, 3.0e-1, 7.0, 1.4491376746189438574},
    {-1.0, 5.0, 5.001, 5.0004999750024996875},
    {0.0, 1.0, 2.0, 1.4426950408889634074},
    {0.0, 3.0e-1, 7.0, 2.1270631636670401266},
    {0.0, 5.0, 5.001, 5.0004999833349997889},
    {5.0e-1, 1.0, 2.0, 1.4571067811865475244},
    {5.0e-1, 3.0e-1, 7.0, 2.5495688373094719287},
    {5.0e-1, 5.0, 5.001, 5.0004999875012498438},
    {1.0, 1.0, 2.0, 1.4715177646857692864},
    {1.0, 3.0e-1, 7.0, 2.9652154205060964995},
    {1.0, 5.0, 5.001, 5.0004999916674998986},
    {3.0, 1.0, 2.0, 1.5275252316519466689},
    {3.0, 3.0e-1, 7.0, 4.130778780488412131},
    {3.0, 5.0, 5.001, 5.0005000083325000764},
};

struct BallRow {
    int n;
    double value;
};
inline const std::vector<BallRow> ball_rows{
    {0, 1.0},
    {1, 2.0},
    {2, 3.1415926535897932385},
    {3, 4.1887902047863909846},
    {4, 4.9348022005446793094},
    {7, 4.7247659703314011696},
    {20, 2.5806891390014060013e-2},
    {60, 3.0962506152968647797e-18},
};

struct KernelHRow {
    double t;
    double value;
};
inline const std::vector<KernelHRow> kernelh_rows{
    {1.0e-8, 1.0000000050000000083},
    {1.0e-2, 1.0050083333194444775},
    {1.0, 1.5819767068693264244},
    {3.0e+1, 3.0000000000002807287e+1},
};

struct KernelDerivRow {
    int n;
    int k;
    double t;
    double value;
};
inline const std::vector<KernelDerivRow> kernelderiv_rows{
    {1, 1, 1.0e-2, 5.0166666111113095231e-1},
    {1, 1, 1.0, 6.6130311266153410544e-1},
    {1, 1, 4.0e+1, 9.9999999999999983431e-1},
    {2, 2, 1.0e-2, 1.0049999722223611105},
    {2, 2, 1.0, 1.4735538040324709659},
    {2, 2, 4.0e+1, 2.0000000000000061261},
    {4, 3, 1.0e-2, 6.1204999970833499999},
    {4, 3, 1.0, 2.272421598224639927e+1},
    {4, 3, 4.0e+1, 9.5999999999999214632e+2},
    {16, 16, 1.0e-2, 1.0757772976899829398e+13},
    {16, 16, 1.0, 2.2547458097455676146e+13},
    {16, 16, 4.0e+1, 2.0922789892170359628e+13},
};

struct AlzerRow {
    double q;
    double s;
    double u;
    double v;
};
inline const std::vector<AlzerRow> alzer_rows{
    {1.0e-1, 2.0e-1, 1.3227286386388338982e-1, 1.5740415451391001887e-1},
    {1.0e-1, 5.0e-1, 3.1830105240211337125e-1, 3.4642499212528897046e-1},
    {1.0e-1, 8.0e-1, 4.881959384395543672e-1, 5.1077495721239448581e-1},
    {5.0e-1, 2.0e-1, 1.1032958178915846276e-1, 1.5135281456052949076e-1},
    {5.0e-1, 5.0e-1, 2.7155330316361197264e-1, 3.2612474834866236194e-1},
    {5.0e-1, 8.0e-1, 4.276113126012419092e-1, 4.7908527139823211367e-1},
    {9.0e-1, 2.0e-1, 1.0158016802169541259e-1, 1.4919400520851850664e-1},
    {9.0e-1, 5.0e-1, 2.5329213545880630967e-1, 3.1946171873178279109e-1},
    {9.0e-1, 8.0e-1, 4.042140152399696177e-1, 4.6920405164128757804e-1},
};

struct APolyRootRow {
    int m;
    int n;
    double c;
    double root;
};
inline const std::vector<APolyRootRow> apolyroot_rows{
    {3, 1, 5.0e-1, 2.6180339887498948482},
    {2, 1, 9.0e-1, 1.595433215948963728},
    {5, 2, 3.0e-1, 2.1827302888641039258},
    {6, 5, 9.5e-1, 1.1577665076912206836},
};

} // namespace oracle

#pragma once

// Canonical golden fixture bytes; mirrored in tests/golden/.
namespace bsl::golden {

inline constexpr char kPrfCsv[] = R"GOLD(seed,path,state,u,label_p05
0x000000000000002a,,0xa759ea27d4727622,0.65371573898705448,0
0x000000000000002a,0,0x02e27a83ece52600,0.011268288811056681,1
0x000000000000002a,1,0xcaaa11a11d115903,0.79165754493175677,0
0x000000000000002a,00,0xf1a28ef588207b02,0.94388669485499743,0
0x000000000000002a,01,0x4b12d2e28790327e,0.29325597792154734,1
0x000000000000002a,10,0x4f7fee78132b6016,0.31054583007350578,1
0x000000000000002a,11,0xd66c20c03e0d58aa,0.83758740132730247,0
0x000000000000002a,011,0x6b44f2dc3e237427,0.41902082325954182,1
0x000000000000002a,111,0xc255a585058bf0c4,0.75911936280822068,0
0x000000000000002a,0000000000,0xd664579a4e0eb8b7,0.83746860043725746,0
0x000000000000002a,1011001110,0x1a6eb8bc4d0f3023,0.10325197789375973,1
0x000000000000002a,10101010101010101010101010101010101010101010101010101010101010101,0xd8540c70ac1e3470,0.84503247977055973,0
0x0000000000000007,,0x12ae30237b17df14,0.072970398580849305,1
0x0000000000000007,0,0xd8aeaf9751ee6fad,0.84641549534165395,0
0x0000000000000007,1,0x6fb17cf53e9a6e4e,0.43630200374045958,1
0x0000000000000007,00,0xd6c3e59fb9e1e50d,0.83892665051997239,0
0x0000000000000007,01,0x5ba7b9051098ebab,0.35802799581196931,1
0x0000000000000007,10,0x9793725cb4d2ad1d,0.59209360850656856,0
0x0000000000000007,11,0x6f00408ce8532fb3,0.43359759750485394,1
0x0000000000000007,011,0x4e8926ccacd003b5,0.30678026673268732,1
0x0000000000000007,111,0x7507fdfdfbfd96ec,0.45715320063390252,1
0x0000000000000007,0000000000,0x8fd81f539aba26f7,0.56189151564715489,0
0x0000000000000007,1011001110,0x6b858754ccf4b210,0.42000623531653747,1
0x0000000000000007,10101010101010101010101010101010101010101010101010101010101010101,0xd6f4af6da48d139b,0.83967110087228414,0
0x0000000000005eed,,0xa18f67d4db95243f,0.63109444567415496,0
0x0000000000005eed,0,0x63ef7e63e5985245,0.39037313403022833,1
0x0000000000005eed,1,0x250cb31712c0e233,0.14472503007232573,1
0x0000000000005eed,00,0x9ccb25f1a0cbeeda,0.61247479580997288,0
0x0000000000005eed,01,0x5dc824a29a143537,0.36633519143841009,1
0x0000000000005eed,10,0x4cd2dbc857c18101,0.30009244576627303,1
0x0000000000005eed,11,0x9d920f5bd5b257eb,0.61550994865474107,0
0x0000000000005eed,011,0xe0cb8b07acccfc75,0.87810582101228707,0
0x0000000000005eed,111,0x6d751b5388058c9f,0.42756815709437579,1
0x0000000000005eed,0000000000,0x79f8827f024c84fb,0.47644820786290332,1
0x0000000000005eed,1011001110,0x79d1eca5dd5b9e81,0.47585944222860943,1
0x0000000000005eed,10101010101010101010101010101010101010101010101010101010101010101,0x2709bdf26d37f73c,0.15249240082377447,1
0x9e3779b97f4a7c3f,,0xbdd732262feb6e95,0.74156487877182331,0
0x9e3779b97f4a7c3f,0,0xe37241c09304f97f,0.88846217109223236,0
0x9e3779b97f4a7c3f,1,0x032bd39e1a01ca35,0.012387491320629995,1
0x9e3779b97f4a7c3f,00,0x6fa9fb4dda704451,0.43618746424402932,1
0x9e3779b97f4a7c3f,01,0xdd1ef3f35ee75a4a,0.86375355426471623,0
0x9e3779b97f4a7c3f,10,0xcb983ef1f4947ccd,0.79529183776010537,0
0x9e3779b97f4a7c3f,11,0x0e298c80dea98d31,0.055321485006663562,1
0x9e3779b97f4a7c3f,011,0x3293586d69724d18,0.19756081267537084,1
0x9e3779b97f4a7c3f,111,0xfef29b57e73148e4,0.99588938613959954,0
0x9e3779b97f4a7c3f,0000000000,0x2d5e8211028cc36a,0.17722332873613578,1
0x9e3779b97f4a7c3f,1011001110,0xf520e573e63ed5a4,0.95753320769858452,0
0x9e3779b97f4a7c3f,10101010101010101010101010101010101010101010101010101010101010101,0xe33fc9df01ba915f,0.88769208616734319,0
0x3c6ef372fe94f854,,0x28efe333b266f103,0.1599103928769201,1
0x3c6ef372fe94f854,0,0x8a2624014c8dc5b5,0.53964448005404275,0
0x3c6ef372fe94f854,1,0xfa6b21fe72bbc9e6,0.9781972166262981,0
0x3c6ef372fe94f854,00,0x54cc263fd4a84dee,0.33124007280699275,1
0x3c6ef372fe94f854,01,0x2e02dd9e354214c1,0.17973122704029998,1
0x3c6ef372fe94f854,10,0x9f46382ea0d814ae,0.62216521395097879,0
0x3c6ef372fe94f854,11,0x479b225705f4ff1a,0.27971090912429364,1
0x3c6ef372fe94f854,011,0xc76ed6123b5c20cb,0.779034976435796,0
0x3c6ef372fe94f854,111,0xf763f0560471e9a8,0.9663686952594116,0
0x3c6ef372fe94f854,0000000000,0xd9f981b7b6e263fd,0.8514634202500786,0
0x3c6ef372fe94f854,1011001110,0xd273df0e6b1605de,0.82208055593499552,0
0x3c6ef372fe94f854,10101010101010101010101010101010101010101010101010101010101010101,0xb59a91fd85956aea,0.70938980521676387,0
)GOLD";

inline constexpr char kSurvivalCsv[] = R"GOLD(n,gw_allones,rho_dp_half_crit,periodic_lower,allones_upper
2,0.609375,0.609375,0.70440225747791718,0.75
3,0.51654052734375,0.51654052734375,0.52827871130140758,0.609375
5,0.39924866699872996,0.39924866699872996,0.3480423003109151,0.44983699824661016
10,0.25850986893612649,0.25850986893612649,0.18658558834162098,0.27780357558857605
20,0.15380708720383784,0.15380708720383784,0.096591095665536586,0.16022510855685146
50,0.070424274696465949,0.070424274696465949,0.039449149370730074,0.071709850355985538
100,0.037229996764950091,0.037229996764950091,0.019861830209112252,0.037583119482458294
200,0.019221193793309332,0.019221193793309332,0.0099654001753566313,0.019314455844451128
)GOLD";

}  // namespace bsl::golden
